#include "magnitude/ratio.hpp"

#include <algorithm>

#include "stern_brocot.hpp"

namespace magnitude {
namespace {

using detail::Fraction;
using detail::Probe;

enum class Cmp { less, equal, greater, unknown };

/// m*x against n*y. Exact when both are exact; otherwise certified at
/// p = 4, 8, ... up to cap, and unknown past that.
Cmp scaled_compare(const Element& x, const Element& y, const mpz_class& m, const mpz_class& n, unsigned cap) {
    auto ex = x.exact_value();
    auto ey = y.exact_value();
    if (ex && ey) {
        int c = cmp(m * ex->value(), n * ey->value());
        return c < 0 ? Cmp::less : c > 0 ? Cmp::greater : Cmp::equal;
    }
    const PosReal rx = to_real(x);
    const PosReal ry = to_real(y);
    for (unsigned p = std::min(4u, cap);; p = std::min(2 * p, cap)) {
        Interval ix = rx.approx(p);
        Interval iy = ry.approx(p);
        if (m * ix.hi().value() < n * iy.lo().value()) return Cmp::less;
        if (m * ix.lo().value() > n * iy.hi().value()) return Cmp::greater;
        if (p >= cap) return Cmp::unknown;
    }
}

/// Least k >= 1 with pred(k), for predicates that become and stay true.
mpz_class least_true(const std::function<bool(const mpz_class&)>& pred) {
    mpz_class hi = 1;
    while (!pred(hi)) hi *= 2;
    if (hi == 1) return hi;
    mpz_class lo = hi / 2;
    while (hi - lo > 1) {
        mpz_class mid = (lo + hi) / 2;
        if (pred(mid)) hi = mid; else lo = mid;
    }
    return hi;
}

Witness to_witness(const Fraction& f) {
    // The separator n/m is stored in the tree as f.n / f.m.
    return Witness{Nat::from_mpz(f.m), Nat::from_mpz(f.n)};
}

/// Simplest fraction in [lo, hi), found by an exact tree walk.
Fraction simplest_in(const mpq_class& lo, const mpq_class& hi) {
    auto out = detail::stern_brocot_search(
        [&](const Fraction& f) {
            mpq_class v(f.n, f.m);
            if (v < lo) return Probe::go_right;
            if (v >= hi) return Probe::go_left;
            return Probe::hit;
        },
        UINT64_MAX);
    return *out.hit;
}

void require_pair(const Element& a, const Element& b) { require_same_model(a, b); }

} // namespace

std::string Witness::to_string() const { return "m=" + m.to_string() + " n=" + n.to_string(); }

Ratio::Ratio(Element antecedent, Element consequent)
    : antecedent_(std::move(antecedent)), consequent_(std::move(consequent)) {
    require_pair(antecedent_, consequent_);
}

std::string_view to_string(RatioVerdict v) noexcept {
    switch (v) {
    case RatioVerdict::equal: return "equal";
    case RatioVerdict::greater: return "greater";
    case RatioVerdict::less: return "less";
    case RatioVerdict::unknown: return "unknown";
    }
    return "?";
}

unsigned precision_cap(std::uint64_t fuel) noexcept {
    std::uint64_t cap = 2 * std::min<std::uint64_t>(fuel, 1u << 20) + 64;
    return static_cast<unsigned>(std::clamp<std::uint64_t>(cap, 64, 4096));
}

std::pair<Nat, Nat> have_ratio_witness(const Element& a, const Element& b, unsigned max_p) {
    require_pair(a, b);
    if (a.model() != ModelId::real) return {find_multiple_exceeding(a, b), find_multiple_exceeding(b, a)};
    auto exceeding = [&](const Element& x, const Element& y) {
        return Nat::from_mpz(least_true(
            [&](const mpz_class& k) { return scaled_compare(x, y, k, 1, max_p) == Cmp::greater; }));
    };
    return {exceeding(a, b), exceeding(b, a)};
}

PosRat ratio_value_exact(const Ratio& r) {
    if (r.model() == ModelId::real) fail(ErrorKind::inexact_model, "real ratios have no exact value");
    return *r.antecedent().exact_value() / *r.consequent().exact_value();
}

RatioRel ratio_compare(const Ratio& first, const Ratio& second, std::uint64_t fuel) {
    return ratio_compare(first.antecedent(), first.consequent(), second.antecedent(), second.consequent(), fuel);
}

RatioRel ratio_compare(const Element& a, const Element& b, const Element& a2, const Element& b2,
                       std::uint64_t fuel) {
    if (fuel < 1) fail(ErrorKind::invalid_argument, "fuel must be at least 1");
    require_pair(a, b);
    require_pair(a2, b2);

    auto va = a.exact_value(), vb = b.exact_value(), va2 = a2.exact_value(), vb2 = b2.exact_value();
    if (va && vb && va2 && vb2) {
        mpq_class v1 = va->value() / vb->value();
        mpq_class v2 = va2->value() / vb2->value();
        int c = cmp(v1, v2);
        if (c == 0) return {RatioVerdict::equal, std::nullopt, 0};
        // Greater: a separator n/m with v2 <= n/m < v1, so ma > nb and ma2 <= nb2.
        Fraction f = c > 0 ? simplest_in(v2, v1) : simplest_in(v1, v2);
        return {c > 0 ? RatioVerdict::greater : RatioVerdict::less, to_witness(f), 0};
    }

    const unsigned cap = precision_cap(fuel);
    RatioRel result;
    auto out = detail::stern_brocot_search(
        [&](const Fraction& f) {
            // f = n/m; c1 is the sign of a:b - n/m, c2 that of a2:b2 - n/m.
            Cmp c1 = scaled_compare(a, b, f.m, f.n, cap);
            Cmp c2 = scaled_compare(a2, b2, f.m, f.n, cap);
            Witness w = to_witness(f);
            if (c1 == Cmp::greater && (c2 == Cmp::less || c2 == Cmp::equal)) {
                result.verdict = RatioVerdict::greater;
                result.witness = c2 == Cmp::equal ? upgrade_boundary_witness(w, a, b, a2, b2, cap) : w;
                return Probe::hit;
            }
            if (c2 == Cmp::greater && (c1 == Cmp::less || c1 == Cmp::equal)) {
                result.verdict = RatioVerdict::less;
                result.witness = c1 == Cmp::equal ? upgrade_boundary_witness(w, a2, b2, a, b, cap) : w;
                return Probe::hit;
            }
            if (c1 == Cmp::greater || c2 == Cmp::greater) return Probe::go_right;
            if (c1 == Cmp::less || c2 == Cmp::less) return Probe::go_left;
            // Both at or indistinguishable from n/m: nothing separates them here.
            return Probe::go_right;
        },
        fuel);
    result.fuel_spent = out.probes;
    if (!out.hit) {
        result.verdict = RatioVerdict::unknown;
        result.witness.reset();
    }
    return result;
}

bool verify_witness(const Witness& w, const Element& a, const Element& b, const Element& a2, const Element& b2,
                    unsigned max_p) {
    require_pair(a, b);
    require_pair(a2, b2);
    if (scaled_compare(a, b, w.m.value(), w.n.value(), max_p) != Cmp::greater) return false;
    return scaled_compare(a2, b2, w.m.value(), w.n.value(), max_p) != Cmp::greater;
}

Witness upgrade_boundary_witness(const Witness& boundary, const Element& a, const Element& b,
                                 const Element& a2, const Element& b2, unsigned max_p) {
    const mpz_class& j = boundary.m.value();
    const mpz_class& k = boundary.n.value();
    if (scaled_compare(a, b, j, k, max_p) != Cmp::greater || scaled_compare(a2, b2, j, k, max_p) != Cmp::equal)
        fail(ErrorKind::invalid_argument, "boundary witness requires ja > kb and ja2 = kb2");
    // p(ja - kb) > a  <=>  (pj - 1)a > (pk)b
    mpz_class p = least_true(
        [&](const mpz_class& q) { return scaled_compare(a, b, q * j - 1, q * k, max_p) == Cmp::greater; });
    return Witness{Nat::from_mpz(p * j - 1), Nat::from_mpz(p * k)};
}

} // namespace magnitude
