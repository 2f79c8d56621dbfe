#include "magnitude/real.hpp"

#include <algorithm>
#include <utility>

#include "magnitude/error.hpp"

namespace magnitude {
namespace {

mpz_class ceil_of(const mpq_class& v) {
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return out;
}

unsigned bit_length(const mpz_class& v) {
    return static_cast<unsigned>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

PosRat pos(mpq_class v) { return PosRat::from_mpq(std::move(v)); }

constexpr unsigned refinement_budget = 1u << 14;
constexpr unsigned precision_grid = 8;

// Composite descriptions nest their operands; the cap keeps repeated
// squaring from growing them exponentially.
constexpr std::size_t description_cap = 160;

std::string capped(std::string d) {
    if (d.size() > description_cap) {
        d.resize(description_cap - 3);
        d += "...";
    }
    return d;
}

} // namespace

PosReal::PosReal(Oracle oracle, std::string description) {
    auto state = std::make_shared<State>();
    state->oracle = std::move(oracle);
    state->description = capped(std::move(description));
    state_ = std::move(state);
}

PosReal::PosReal(const PosRat& exact) {
    auto state = std::make_shared<State>();
    state->exact = exact;
    state->description = exact.to_string();
    state_ = std::move(state);
}

Interval PosReal::approx(unsigned p) const {
    if (state_->exact) return Interval(*state_->exact);
    // Oracles run on a coarse precision grid so that nearby requests, and the
    // requests they cascade into, share memoized refinements.
    const unsigned q = (p + precision_grid - 1) / precision_grid * precision_grid;
    {
        std::lock_guard lock(state_->mutex);
        if (auto it = state_->cache.find(q); it != state_->cache.end()) return it->second;
    }
    // Computed outside the lock; a racing thread computes the same interval.
    Interval iv = state_->oracle(q);
    if (!iv.width_within(q))
        fail(ErrorKind::oracle_failure, "refinement of " + state_->description + " at precision " +
                                            std::to_string(q) + " is too wide: " + iv.to_string());
    std::lock_guard lock(state_->mutex);
    return state_->cache.emplace(q, std::move(iv)).first->second;
}

PosReal real_from_rat(const PosRat& q) { return PosReal(q); }

Interval real_approx(const PosReal& x, unsigned p) { return x.approx(p); }

PosReal real_add(const PosReal& x, const PosReal& y) {
    if (x.exact() && y.exact()) return PosReal(*x.exact() + *y.exact());
    return PosReal(
        [x, y](unsigned p) {
            Interval a = x.approx(p + 2);
            Interval b = y.approx(p + 2);
            return round_outward(Interval(a.lo() + b.lo(), a.hi() + b.hi()), p + 2);
        },
        "(" + x.description() + " + " + y.description() + ")");
}

PosReal real_scale(const PosReal& x, const PosRat& k) {
    if (x.exact()) return PosReal(*x.exact() * k);
    unsigned extra = bit_length(ceil_of(k.value()));
    return PosReal(
        [x, k, extra](unsigned p) {
            Interval a = x.approx(p + extra + 1);
            return round_outward(Interval(a.lo() * k, a.hi() * k), p + 2);
        },
        "(" + k.to_string() + " * " + x.description() + ")");
}

PosReal real_mul(const PosReal& x, const PosReal& y) {
    if (x.exact() && y.exact()) return PosReal(*x.exact() * *y.exact());
    if (x.exact()) return real_scale(y, *x.exact());
    if (y.exact()) return real_scale(x, *y.exact());
    return PosReal(
        [x, y](unsigned p) {
            // width <= (X.hi + Y.lo) 2^-q and X.hi <= X0.hi + 1 at any q >= 0
            mpz_class bound = ceil_of(x.approx(0).hi().value() + y.approx(0).hi().value()) + 2;
            unsigned q = p + 1 + bit_length(bound);
            Interval a = x.approx(q);
            Interval b = y.approx(q);
            return round_outward(Interval(a.lo() * b.lo(), a.hi() * b.hi()), p + 2);
        },
        "(" + x.description() + " * " + y.description() + ")");
}

RealOrder real_compare(const PosReal& x, const PosReal& y, unsigned p) {
    if (x.exact() && y.exact()) {
        auto o = *x.exact() <=> *y.exact();
        if (o < 0) return RealOrder::less_certified;
        if (o > 0) return RealOrder::greater_certified;
        return RealOrder::overlap;
    }
    Interval a = x.approx(p);
    Interval b = y.approx(p);
    if (a.hi() < b.lo()) return RealOrder::less_certified;
    if (b.hi() < a.lo()) return RealOrder::greater_certified;
    return RealOrder::overlap;
}

RealOrder real_compare_escalating(const PosReal& x, const PosReal& y, unsigned max_p, unsigned start) {
    unsigned p = std::min(start, max_p);
    for (;;) {
        RealOrder r = real_compare(x, y, p);
        if (r != RealOrder::overlap || p >= max_p) return r;
        p = std::min(std::max(2 * p, p + 1), max_p);
    }
}

PosReal real_subtract(const PosReal& x, const PosReal& y, unsigned max_p) {
    if (x.exact() && y.exact()) {
        if (*y.exact() >= *x.exact()) fail(ErrorKind::not_greater, "subtrahend is not smaller than minuend");
        return PosReal(pos(x.exact()->value() - y.exact()->value()));
    }
    switch (real_compare_escalating(x, y, max_p)) {
    case RealOrder::less_certified:
        fail(ErrorKind::not_greater, "subtrahend is certified larger than minuend");
    case RealOrder::overlap:
        fail(ErrorKind::undecided, "cannot certify " + x.description() + " > " + y.description() +
                                       " up to precision " + std::to_string(max_p));
    case RealOrder::greater_certified:
        break;
    }
    return PosReal(
        [x, y](unsigned p) {
            // x - y > 0 is certified, so X.lo - Y.hi turns positive once 2^(1-q) < x - y.
            for (unsigned q = p + 2; q <= p + refinement_budget; q += 8) {
                Interval a = x.approx(q);
                Interval b = y.approx(q);
                mpq_class lo = a.lo().value() - b.hi().value();
                if (sgn(lo) > 0 && a.width() + b.width() <= dyadic_unit(p + 1))
                    return round_outward(Interval(pos(lo), pos(a.hi().value() - b.lo().value())), p + 2);
            }
            fail(ErrorKind::oracle_failure, "difference refinement exhausted its budget");
        },
        "(" + x.description() + " - " + y.description() + ")");
}

Interval solve_increasing(const Classifier& classify, mpq_class lo, mpq_class hi, unsigned p,
                          unsigned q_start) {
    if (sgn(lo) <= 0 || hi < lo) fail(ErrorKind::invalid_argument, "solver bracket must satisfy 0 < lo <= hi");
    const mpq_class unit = dyadic_unit(p);
    const unsigned cap = q_start + refinement_budget;
    unsigned q = q_start;

    // Applies one classification; true when the bracket changed or r was hit.
    auto step = [&](const mpq_class& c, bool& hit) {
        switch (classify(c, q)) {
        case Side::below: lo = c; return true;
        case Side::above: hi = c; return true;
        case Side::hit: lo = c; hi = c; hit = true; return true;
        case Side::unknown: return false;
        }
        return false;
    };

    while (hi - lo > unit) {
        bool hit = false;
        mpq_class w = hi - lo;
        mpq_class mid = lo + w / 2;
        if (step(mid, hit)) {
            if (hit) break;
            continue;
        }
        mpq_class m1 = lo + w * mpq_class(3, 8);
        mpq_class m2 = lo + w * mpq_class(5, 8);
        if (step(m1, hit) || step(m2, hit)) {
            if (hit) break;
            continue;
        }
        q += std::max(8u, q / 2);
        if (q > cap) fail(ErrorKind::oracle_failure, "bisection exhausted its precision budget");
    }
    return Interval(pos(lo), pos(hi));
}

PosReal solved_real(Classifier classify, mpq_class lo, mpq_class hi, std::string description, unsigned guard) {
    struct Brackets {
        std::mutex mutex;
        std::map<unsigned, Interval> found;
    };
    auto brackets = std::make_shared<Brackets>();
    return PosReal(
        [classify = std::move(classify), lo = std::move(lo), hi = std::move(hi), brackets, guard](unsigned p) {
            mpq_class from = lo;
            mpq_class to = hi;
            {
                std::lock_guard lock(brackets->mutex);
                auto it = brackets->found.lower_bound(p);
                if (it != brackets->found.begin()) {
                    const Interval& best = std::prev(it)->second;
                    from = std::max(from, best.lo().value());
                    to = std::min(to, best.hi().value());
                }
            }
            Interval iv = solve_increasing(classify, from, to, p, p + guard);
            std::lock_guard lock(brackets->mutex);
            brackets->found.emplace(p, iv);
            return iv;
        },
        std::move(description));
}

PosReal relabel(const PosReal& x, std::string description) {
    if (x.exact()) return x;
    return PosReal([x](unsigned p) { return x.approx(p); }, std::move(description));
}

} // namespace magnitude
