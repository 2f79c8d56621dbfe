#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace magnitude {

enum class ErrorKind {
    parse,
    not_greater,
    discrete_model,
    model_mismatch,
    inexact_model,
    oracle_failure,
    guard_exceeded,
    not_symmetric,
    not_above_one,
    unsupported_codomain,
    unsupported_domain,
    signature_mismatch,
    undecided,
    no_unit,
    invalid_argument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Domain error raised by every operation in the library. The kind is the
/// stable part; the message is for humans.
class MagnitudeError : public std::runtime_error {
public:
    MagnitudeError(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw MagnitudeError(kind, message);
}

} // namespace magnitude
