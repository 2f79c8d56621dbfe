#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include <gmpxx.h>

namespace magnitude::detail {

/// n/m with m possibly 0 for the right sentinel 1/0.
struct Fraction {
    mpz_class n;
    mpz_class m;
};

/// go_right: the target lies above the probed fraction; go_left: below.
enum class Probe { go_right, go_left, hit };

struct SternBrocotOutcome {
    Fraction left{0, 1};
    Fraction right{1, 0};
    std::optional<Fraction> hit;
    std::uint64_t probes = 0;
    bool exhausted = false;
};

using ProbeFn = std::function<Probe(const Fraction&)>;
using DoneFn = std::function<bool(const Fraction& left, const Fraction& right)>;

/// Walks the Stern-Brocot tree from the root 1/1, galloping through runs of
/// same-direction moves (doubling then binary search), so a target with
/// continued fraction [a0; a1, ...] costs O(sum log a_i) probes. Stops on a
/// hit, when `done` accepts the current bracket, or after max_probes probes.
SternBrocotOutcome stern_brocot_search(const ProbeFn& probe, std::uint64_t max_probes, const DoneFn& done = {});

} // namespace magnitude::detail
