#include "sampling.hpp"

namespace magnitude::detail {

std::uint64_t SampleSource::between(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo;
    if (span == UINT64_MAX) return rng_();
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t r;
    do {
        r = rng_();
    } while (r >= limit);
    return lo + r % range;
}

Nat SampleSource::nat(unsigned max_bits) {
    unsigned bits = static_cast<unsigned>(between(0, max_bits));
    std::uint64_t top = bits >= 64 ? UINT64_MAX : (std::uint64_t{1} << bits);
    return Nat(between(1, top));
}

PosRat SampleSource::rat(unsigned max_bits) { return rat_make(nat(max_bits), nat(max_bits)); }

Element SampleSource::exact(ModelId model) {
    switch (model) {
    case ModelId::nat: return nat();
    case ModelId::rat: return rat();
    case ModelId::real: return real_from_rat(rat());
    }
    return rat();
}

std::vector<Element> shrink_candidates(const Element& e) {
    std::vector<Element> out;
    auto push_rat = [&](const PosRat& q, const PosRat& orig) {
        if (q != orig) out.emplace_back(q);
    };
    switch (e.model()) {
    case ModelId::nat: {
        const mpz_class& v = e.as_nat().value();
        if (v > 1) out.emplace_back(Nat{});
        if (v > 3) out.emplace_back(Nat::from_mpz(v / 2));
        if (v > 2) out.emplace_back(Nat::from_mpz(v - 1));
        break;
    }
    case ModelId::rat: {
        const PosRat& q = e.as_rat();
        const mpz_class& n = q.value().get_num();
        const mpz_class& d = q.value().get_den();
        push_rat(PosRat{}, q);
        push_rat(PosRat(q.num()), q);
        push_rat(rat_make(Nat{}, q.den()), q);
        if (n > 1) push_rat(rat_make(Nat::from_mpz((n + 1) / 2), q.den()), q);
        if (d > 1) push_rat(rat_make(q.num(), Nat::from_mpz((d + 1) / 2)), q);
        if (n > 2) push_rat(rat_make(Nat::from_mpz(n - 1), q.den()), q);
        if (d > 2) push_rat(rat_make(q.num(), Nat::from_mpz(d - 1)), q);
        break;
    }
    case ModelId::real:
        break;
    }
    return out;
}

} // namespace magnitude::detail
