#pragma once

#include "magnitude/hom.hpp"

namespace magnitude {

/// An element of the multiplicative magnitude space of reals greater than 1,
/// with a precision p at which approx(p).lo > 1 was observed.
class MulReal {
public:
    const PosReal& value() const noexcept { return value_; }
    unsigned certified_above_one() const noexcept { return certified_at_; }

private:
    MulReal(PosReal value, unsigned certified_at) : value_(std::move(value)), certified_at_(certified_at) {}
    friend MulReal into_mul(const PosReal& x, unsigned max_p);
    friend MulReal mul_combine(const MulReal& x, const MulReal& y);

    PosReal value_;
    unsigned certified_at_;
};

/// Throws not_above_one unless x > 1 is certified by precision max_p.
MulReal into_mul(const PosReal& x, unsigned max_p = 1024);

MulReal mul_combine(const MulReal& x, const MulReal& y);

/// The additive vocabulary of the multiplicative space, so the generic
/// multiple() computes powers by square-and-multiply.
inline MulReal combine(const MulReal& x, const MulReal& y) { return mul_combine(x, y); }

/// x^n
MulReal mul_multiple(const Nat& n, const MulReal& x);

/// The r > 1 with r^n = x. Exact when x is an exact perfect power.
MulReal nth_root(const MulReal& x, const Nat& n);

/// x^y for rational y = m/n: the n-th root raised to m.
MulReal pow(const MulReal& x, const PosRat& y);

/// x^y for real y, bracketed between x^(j/2^k) and x^((j+1)/2^k) by monotonicity.
MulReal pow(const MulReal& x, const PosReal& y);

/// Certified order of x and y; a strict result carries d > 1 with the smaller
/// times d equal to the larger. Throws undecided past max_p.
Ordering3<MulReal> mul_compare(const MulReal& x, const MulReal& y, unsigned max_p = 1024);

/// n-th root of any positive rational as a real, e.g. sqrt(1/2).
PosReal real_root_of_rat(const PosRat& q, const Nat& n);

} // namespace magnitude
