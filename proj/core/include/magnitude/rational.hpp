#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "magnitude/nat.hpp"

namespace magnitude {

/// Strictly positive rational in lowest terms. The symmetric Archimedean model.
class PosRat {
public:
    PosRat() : value_(1) {}
    PosRat(const Nat& num, const Nat& den);
    PosRat(const Nat& n) : PosRat(n, Nat{}) {} // NOLINT(google-explicit-constructor)

    /// Throws ErrorKind::invalid_argument unless v > 0.
    static PosRat from_mpq(mpq_class v);

    Nat num() const { return Nat::from_mpz(value_.get_num()); }
    Nat den() const { return Nat::from_mpz(value_.get_den()); }
    const mpq_class& value() const noexcept { return value_; }

    /// Canonical text form "num/den", always with the slash.
    std::string to_string() const;

    friend PosRat operator+(const PosRat& a, const PosRat& b) { return PosRat(mpq_class(a.value_ + b.value_), 0); }
    friend PosRat operator*(const PosRat& a, const PosRat& b) { return PosRat(mpq_class(a.value_ * b.value_), 0); }
    friend PosRat operator/(const PosRat& a, const PosRat& b) { return PosRat(mpq_class(a.value_ / b.value_), 0); }

    friend bool operator==(const PosRat& a, const PosRat& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const PosRat& a, const PosRat& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

private:
    PosRat(mpq_class v, int) : value_(std::move(v)) {}

    mpq_class value_;
};

/// Reduces num/den to lowest terms.
PosRat rat_make(const Nat& num, const Nat& den);

/// Parses "num/den" or a bare positive integer.
PosRat rat_parse(std::string_view text);

} // namespace magnitude
