#include "stern_brocot.hpp"

namespace magnitude::detail {
namespace {

Fraction along(const Fraction& base, const mpz_class& k, const Fraction& dir) {
    return {base.n + k * dir.n, base.m + k * dir.m};
}

} // namespace

SternBrocotOutcome stern_brocot_search(const ProbeFn& probe, std::uint64_t max_probes, const DoneFn& done) {
    SternBrocotOutcome out;
    Fraction& left = out.left;
    Fraction& right = out.right;

    auto ask = [&](const Fraction& f) -> std::optional<Probe> {
        if (out.probes >= max_probes) {
            out.exhausted = true;
            return std::nullopt;
        }
        ++out.probes;
        Probe p = probe(f);
        if (p == Probe::hit) out.hit = f;
        return p;
    };

    for (;;) {
        if (done && done(left, right)) return out;
        Fraction mediant{left.n + right.n, left.m + right.m};
        auto first = ask(mediant);
        if (!first || *first == Probe::hit) return out;

        // Move from `base` towards `toward`: candidates base + k*toward.
        // k = 1 is known to continue in direction `dir`.
        const Probe dir = *first;
        const Fraction base = dir == Probe::go_right ? left : right;
        const Fraction toward = dir == Probe::go_right ? right : left;
        mpz_class good = 1;
        std::optional<mpz_class> bad;
        for (mpz_class k = 2; !bad; k *= 2) {
            auto p = ask(along(base, k, toward));
            if (!p || *p == Probe::hit) {
                if (dir == Probe::go_right) left = along(base, good, toward);
                else right = along(base, good, toward);
                return out;
            }
            if (*p == dir) good = k; else bad = k;
        }
        while (*bad - good > 1) {
            mpz_class mid = (good + *bad) / 2;
            auto p = ask(along(base, mid, toward));
            if (!p || *p == Probe::hit) {
                if (dir == Probe::go_right) left = along(base, good, toward);
                else right = along(base, good, toward);
                return out;
            }
            if (*p == dir) good = mid; else bad = mid;
        }
        Fraction near = along(base, good, toward);
        Fraction far = along(base, *bad, toward);
        if (dir == Probe::go_right) {
            left = near;
            right = far;
        } else {
            right = near;
            left = far;
        }
    }
}

} // namespace magnitude::detail
