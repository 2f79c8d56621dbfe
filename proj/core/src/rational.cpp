#include "magnitude/rational.hpp"

#include "magnitude/error.hpp"

namespace magnitude {

PosRat::PosRat(const Nat& num, const Nat& den) : value_(num.value(), den.value()) {
    value_.canonicalize();
}

PosRat PosRat::from_mpq(mpq_class v) {
    v.canonicalize();
    if (sgn(v) <= 0) fail(ErrorKind::invalid_argument, "rational magnitude must be positive, got " + v.get_str());
    return PosRat(std::move(v), 0);
}

std::string PosRat::to_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

PosRat rat_make(const Nat& num, const Nat& den) { return PosRat(num, den); }

PosRat rat_parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return PosRat(nat_make(text));
    return rat_make(nat_make(text.substr(0, slash)), nat_make(text.substr(slash + 1)));
}

} // namespace magnitude
