#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "magnitude/interval.hpp"
#include "magnitude/rational.hpp"

namespace magnitude {

/// A computable positive real, represented by a refinement oracle: for each
/// precision p it yields a rational interval of width <= 2^-p containing the
/// value. Refinements are memoized; the oracle must be deterministic so that
/// concurrent refinement of the same precision yields identical intervals.
///
/// Values produced from rationals remember their exact value, and the
/// arithmetic below keeps exact operands exact.
class PosReal {
public:
    using Oracle = std::function<Interval(unsigned precision)>;

    /// Descriptions longer than 160 characters are truncated.
    PosReal(Oracle oracle, std::string description);
    explicit PosReal(const PosRat& exact);

    /// Interval of width <= 2^-p; the oracle is consulted at p rounded up to a
    /// multiple of 8. Throws ErrorKind::oracle_failure when the
    /// oracle breaks its contract or runs out of refinement budget.
    Interval approx(unsigned p) const;

    const std::optional<PosRat>& exact() const noexcept { return state_->exact; }
    const std::string& description() const noexcept { return state_->description; }

    bool same_object(const PosReal& other) const noexcept { return state_ == other.state_; }

private:
    struct State {
        Oracle oracle;
        std::optional<PosRat> exact;
        std::string description;
        mutable std::mutex mutex;
        mutable std::map<unsigned, Interval> cache;
    };
    std::shared_ptr<const State> state_;
};

enum class RealOrder { less_certified, greater_certified, overlap };

PosReal real_from_rat(const PosRat& q);
Interval real_approx(const PosReal& x, unsigned p);

/// Results are rounded outward to dyadics so endpoint sizes stay bounded.
PosReal real_add(const PosReal& x, const PosReal& y);
PosReal real_mul(const PosReal& x, const PosReal& y);
PosReal real_scale(const PosReal& x, const PosRat& k);

/// Certified comparison at a single precision. Strict results are only
/// returned when the p-intervals are disjoint.
RealOrder real_compare(const PosReal& x, const PosReal& y, unsigned p);

/// Comparison escalating over p = start, 2*start, ... up to max_p (inclusive).
RealOrder real_compare_escalating(const PosReal& x, const PosReal& y, unsigned max_p, unsigned start = 4);

/// x - y. Requires x > y to be certifiable by max_p; otherwise throws
/// not_greater (y certified larger) or undecided (overlap at max_p).
PosReal real_subtract(const PosReal& x, const PosReal& y, unsigned max_p);

/// Outcome of classifying a rational candidate c against the unknown root r
/// of a monotone problem at working precision q.
enum class Side { below, above, hit, unknown };
using Classifier = std::function<Side(const mpq_class& candidate, unsigned q)>;

/// Bisection with certified comparisons. Requires 0 < lo <= r <= hi.
/// Uses the midpoint when it can be classified and falls back to the 3/8 and
/// 5/8 points otherwise; at least one of those is far enough from r to be
/// decided once q is large enough, so the search always makes progress.
/// Returns an interval of width <= 2^-p containing r.
Interval solve_increasing(const Classifier& classify, mpq_class lo, mpq_class hi, unsigned p,
                          unsigned q_start);

/// The root r in [lo, hi] of a monotone classification problem, as a lazy
/// real. Each refinement starts from the tightest bracket found so far and
/// classifies at guard bits beyond the requested precision.
PosReal solved_real(Classifier classify, mpq_class lo, mpq_class hi, std::string description, unsigned guard = 8);

/// Same value under a new description (used for parseable text forms).
PosReal relabel(const PosReal& x, std::string description);

} // namespace magnitude
