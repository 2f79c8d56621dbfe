#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "magnitude/descriptor.hpp"
#include "magnitude/error.hpp"
#include "magnitude/nat.hpp"
#include "magnitude/rational.hpp"
#include "magnitude/real.hpp"

namespace magnitude {

enum class OrderTag { less, equal, greater };

std::string_view to_string(OrderTag tag) noexcept;

inline OrderTag tag_of(std::strong_ordering o) noexcept {
    if (o < 0) return OrderTag::less;
    if (o > 0) return OrderTag::greater;
    return OrderTag::equal;
}

inline OrderTag flip(OrderTag t) noexcept {
    return t == OrderTag::less ? OrderTag::greater : t == OrderTag::greater ? OrderTag::less : t;
}

/// Trichotomy outcome for compare(a, b). LessBy(d) means a + d = b,
/// GreaterBy(d) means b + d = a.
template <class T>
class Ordering3 {
public:
    static Ordering3 less_by(T d) { return Ordering3(OrderTag::less, std::move(d)); }
    static Ordering3 greater_by(T d) { return Ordering3(OrderTag::greater, std::move(d)); }
    static Ordering3 equal() { return Ordering3(OrderTag::equal, std::nullopt); }

    OrderTag tag() const noexcept { return tag_; }
    bool is_equal() const noexcept { return tag_ == OrderTag::equal; }

    /// The witness d. Throws invalid_argument on Equal.
    const T& difference() const {
        if (!difference_) fail(ErrorKind::invalid_argument, "equal elements carry no difference");
        return *difference_;
    }

private:
    Ordering3(OrderTag tag, std::optional<T> d) : tag_(tag), difference_(std::move(d)) {}

    OrderTag tag_;
    std::optional<T> difference_;
};

template <class T>
struct ModelTraits;

template <>
struct ModelTraits<Nat> {
    static constexpr ModelId id = ModelId::nat;
    static constexpr bool discrete = true;
};

template <>
struct ModelTraits<PosRat> {
    static constexpr ModelId id = ModelId::rat;
    static constexpr bool discrete = false;
};

template <>
struct ModelTraits<PosReal> {
    static constexpr ModelId id = ModelId::real;
    static constexpr bool discrete = false;
};

inline Nat combine(const Nat& a, const Nat& b) { return a + b; }
inline PosRat combine(const PosRat& a, const PosRat& b) { return a + b; }
inline PosReal combine(const PosReal& a, const PosReal& b) { return real_add(a, b); }

Ordering3<Nat> compare(const Nat& a, const Nat& b);
Ordering3<PosRat> compare(const PosRat& a, const PosRat& b);

inline PosRat scale_down(const PosRat& a, const Nat& k) { return a / PosRat(k); }
inline PosReal scale_down(const PosReal& a, const Nat& k) { return real_scale(a, PosRat(Nat{}, k)); }

template <class T>
concept Magnitude = requires(const T& a, const T& b) {
    { combine(a, b) } -> std::convertible_to<T>;
};

/// Models whose order is decidable without precision parameters.
template <class T>
concept ExactMagnitude = Magnitude<T> && requires(const T& a, const T& b) {
    { compare(a, b) } -> std::same_as<Ordering3<T>>;
};

/// The unique d with a + d = b. Throws not_greater unless a < b.
template <ExactMagnitude T>
T subtract(const T& b, const T& a) {
    auto o = compare(a, b);
    if (o.tag() != OrderTag::less) fail(ErrorKind::not_greater, "subtrahend is not smaller than minuend");
    return o.difference();
}

/// n-fold sum of a by double-and-add: O(log n) combines.
template <Magnitude T>
T multiple(const Nat& n, const T& a) {
    T result = a;
    for (std::size_t i = n.bit_length() - 1; i-- > 0;) {
        result = combine(result, result);
        if (n.bit(i)) result = combine(result, a);
    }
    return result;
}

inline constexpr std::uint64_t naive_guard = std::uint64_t{1} << 16;

/// Literal recursion (n+1)a = na + a. Test oracle for multiple; n <= 2^16.
template <Magnitude T>
T multiple_naive(const Nat& n, const T& a) {
    if (n > Nat(naive_guard)) fail(ErrorKind::guard_exceeded, "multiple_naive is limited to n <= 65536");
    T result = a;
    for (std::uint64_t i = 1; i < n.to_u64(); ++i) result = combine(result, a);
    return result;
}

/// Least n with na > b, by doubling then binary search.
template <ExactMagnitude T>
Nat find_multiple_exceeding(const T& a, const T& b) {
    auto exceeds = [&](const mpz_class& n) {
        return compare(multiple(Nat::from_mpz(n), a), b).tag() == OrderTag::greater;
    };
    mpz_class hi = 1;
    while (!exceeds(hi)) hi *= 2;
    if (hi == 1) return Nat{};
    // invariant: lo does not exceed, hi exceeds
    mpz_class lo = hi / 2;
    while (hi - lo > 1) {
        mpz_class mid = (lo + hi) / 2;
        if (exceeds(mid)) hi = mid; else lo = mid;
    }
    return Nat::from_mpz(hi);
}

/// Some b with nb < a. Only nondiscrete models qualify.
template <Magnitude T>
T shrink_below(const T& a, const Nat& n) {
    if constexpr (ModelTraits<T>::discrete) {
        fail(ErrorKind::discrete_model, std::string(to_string(ModelTraits<T>::id)) + " is discrete");
    } else {
        return scale_down(a, n + Nat{});
    }
}

} // namespace magnitude
