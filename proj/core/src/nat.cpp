#include "magnitude/nat.hpp"

#include <algorithm>

#include "magnitude/error.hpp"

namespace magnitude {

Nat::Nat(std::uint64_t v) : value_() {
    if (v == 0) fail(ErrorKind::invalid_argument, "natural numbers start at 1");
    mpz_import(value_.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
}

Nat Nat::from_mpz(mpz_class v) {
    if (v < 1) fail(ErrorKind::invalid_argument, "natural numbers start at 1, got " + v.get_str());
    return Nat(std::move(v), 0);
}

std::uint64_t Nat::to_u64() const {
    if (!fits_u64()) fail(ErrorKind::invalid_argument, "value does not fit in 64 bits: " + to_string());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, value_.get_mpz_t());
    return out;
}

Nat nat_make(std::string_view text) {
    if (text.empty()) fail(ErrorKind::parse, "empty natural number");
    if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        fail(ErrorKind::parse, "not a positive decimal integer: '" + std::string(text) + "'");
    mpz_class v(std::string(text), 10);
    if (v == 0) fail(ErrorKind::parse, "zero is not a magnitude");
    return Nat::from_mpz(std::move(v));
}

} // namespace magnitude
