#include "magnitude/core.hpp"

namespace magnitude {

std::string_view to_string(OrderTag tag) noexcept {
    switch (tag) {
    case OrderTag::less: return "less";
    case OrderTag::equal: return "equal";
    case OrderTag::greater: return "greater";
    }
    return "?";
}

Ordering3<Nat> compare(const Nat& a, const Nat& b) {
    int c = cmp(a.value(), b.value());
    if (c < 0) return Ordering3<Nat>::less_by(Nat::from_mpz(b.value() - a.value()));
    if (c > 0) return Ordering3<Nat>::greater_by(Nat::from_mpz(a.value() - b.value()));
    return Ordering3<Nat>::equal();
}

Ordering3<PosRat> compare(const PosRat& a, const PosRat& b) {
    int c = cmp(a.value(), b.value());
    if (c < 0) return Ordering3<PosRat>::less_by(PosRat::from_mpq(b.value() - a.value()));
    if (c > 0) return Ordering3<PosRat>::greater_by(PosRat::from_mpq(a.value() - b.value()));
    return Ordering3<PosRat>::equal();
}

} // namespace magnitude
