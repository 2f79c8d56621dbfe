#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace magnitude {

/// Arbitrary-precision natural number, always >= 1. This is the well-ordered
/// magnitude space: no zero, smallest element 1.
class Nat {
public:
    Nat() : value_(1) {}
    Nat(std::uint64_t v); // NOLINT(google-explicit-constructor): literals read naturally

    /// Throws ErrorKind::invalid_argument when v < 1.
    static Nat from_mpz(mpz_class v);

    const mpz_class& value() const noexcept { return value_; }
    std::string to_string() const { return value_.get_str(); }

    std::size_t bit_length() const { return mpz_sizeinbase(value_.get_mpz_t(), 2); }
    bool bit(std::size_t i) const { return mpz_tstbit(value_.get_mpz_t(), i) != 0; }
    bool fits_u64() const { return bit_length() <= 64; }
    std::uint64_t to_u64() const;

    friend Nat operator+(const Nat& a, const Nat& b) { return Nat(mpz_class(a.value_ + b.value_), 0); }
    friend Nat operator*(const Nat& a, const Nat& b) { return Nat(mpz_class(a.value_ * b.value_), 0); }

    friend bool operator==(const Nat& a, const Nat& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

private:
    // Unchecked constructor for results that are positive by construction.
    Nat(mpz_class v, int) : value_(std::move(v)) {}

    mpz_class value_;
};

/// Parses a positive decimal integer. "0", signs and non-digits are rejected
/// with ErrorKind::parse.
Nat nat_make(std::string_view text);

} // namespace magnitude
