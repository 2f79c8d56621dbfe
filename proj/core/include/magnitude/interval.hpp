#pragma once

#include <string>

#include <gmpxx.h>

#include "magnitude/rational.hpp"

namespace magnitude {

/// Closed interval [lo, hi] of positive rationals.
class Interval {
public:
    explicit Interval(const PosRat& point) : lo_(point), hi_(point) {}
    Interval(PosRat lo, PosRat hi);

    const PosRat& lo() const noexcept { return lo_; }
    const PosRat& hi() const noexcept { return hi_; }

    mpq_class width() const { return hi_.value() - lo_.value(); }
    mpq_class midpoint() const { return (lo_.value() + hi_.value()) / 2; }

    bool contains(const mpq_class& v) const { return lo_.value() <= v && v <= hi_.value(); }
    bool contains(const PosRat& v) const { return contains(v.value()); }
    bool intersects(const Interval& other) const {
        return lo_ <= other.hi_ && other.lo_ <= hi_;
    }
    /// hi - lo <= 2^-p
    bool width_within(unsigned p) const;

    /// "[lo, hi]" with exact rational endpoints.
    std::string to_string() const;

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    PosRat lo_;
    PosRat hi_;
};

/// 2^-p as an exact rational.
mpq_class dyadic_unit(unsigned p);

/// Endpoints rounded outward to multiples of 2^-bits, widening by at most
/// 2^-bits on each side. A lower endpoint that would round to zero is kept.
Interval round_outward(const Interval& iv, unsigned bits);

} // namespace magnitude
