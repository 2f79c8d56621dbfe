#include "magnitude/power.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

namespace magnitude {
namespace {

PosRat pos(mpq_class v) { return PosRat::from_mpq(std::move(v)); }

unsigned bit_length(const mpz_class& v) { return static_cast<unsigned>(mpz_sizeinbase(v.get_mpz_t(), 2)); }

mpz_class ceil_of(const mpq_class& v) {
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return out;
}

mpz_class floor_of(const mpq_class& v) {
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return out;
}

unsigned long small_exponent(const Nat& n) {
    if (!n.fits_u64() || n.to_u64() > (1u << 20))
        fail(ErrorKind::invalid_argument, "root index " + n.to_string() + " is too large");
    return static_cast<unsigned long>(n.to_u64());
}

mpq_class power_of(const mpq_class& c, unsigned long n) {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), c.get_num_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), c.get_den_mpz_t(), n);
    return mpq_class(num, den); // already canonical
}

std::optional<mpz_class> exact_root(const mpz_class& v, unsigned long n) {
    mpz_class r;
    if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), n) != 0) return r;
    return std::nullopt;
}

PosReal root_of(const PosReal& x, unsigned long n) {
    if (x.exact()) {
        const mpq_class& v = x.exact()->value();
        auto num = exact_root(v.get_num(), n);
        auto den = exact_root(v.get_den(), n);
        if (num && den) return real_from_rat(pos(mpq_class(*num, *den)));
    }
    const mpq_class hi = x.approx(0).hi().value();
    const std::optional<PosRat> exact = x.exact();
    return solved_real(
        [x, n, exact](const mpq_class& c, unsigned q) {
            const mpq_class cn = power_of(c, n);
            if (exact) {
                int s = cmp(cn, exact->value());
                return s < 0 ? Side::below : s > 0 ? Side::above : Side::hit;
            }
            Interval iv = x.approx(q);
            if (cn < iv.lo().value()) return Side::below;
            if (cn > iv.hi().value()) return Side::above;
            return Side::unknown;
        },
        mpq_class(1), hi, "root(" + x.description() + ", " + std::to_string(n) + ")");
}

} // namespace

MulReal into_mul(const PosReal& x, unsigned max_p) {
    // nullopt while 1 lies inside the interval
    auto above = [&](unsigned p) -> std::optional<bool> {
        Interval iv = x.approx(p);
        if (iv.lo().value() > 1) return true;
        if (iv.hi().value() <= 1) return false;
        return std::nullopt;
    };
    unsigned failed = 0;
    for (unsigned p = 0;; p = p == 0 ? 1 : 2 * p) {
        p = std::min(p, max_p);
        auto r = above(p);
        if (r && !*r) break;
        if (r) {
            // least certifying precision in (failed, p], assuming certificates persist
            unsigned lo = failed, hi = p;
            if (p == 0) return MulReal(x, 0);
            while (hi - lo > 1) {
                unsigned mid = lo + (hi - lo) / 2;
                auto m = above(mid);
                if (m && *m) hi = mid; else lo = mid;
            }
            return MulReal(x, hi);
        }
        failed = p;
        if (p >= max_p) break;
    }
    fail(ErrorKind::not_above_one, x.description() + " is not certifiably greater than 1");
}

MulReal mul_combine(const MulReal& x, const MulReal& y) {
    PosReal v = real_mul(x.value(), y.value());
    // the operands' certificates usually carry over, which avoids a fresh search
    const unsigned hint = std::max(x.certified_above_one(), y.certified_above_one()) + 2;
    if (v.approx(hint).lo().value() > 1) return MulReal(std::move(v), hint);
    return into_mul(v);
}

MulReal mul_multiple(const Nat& n, const MulReal& x) { return multiple(n, x); }

MulReal nth_root(const MulReal& x, const Nat& n) {
    if (n == Nat{}) return x;
    return into_mul(root_of(x.value(), small_exponent(n)));
}

MulReal pow(const MulReal& x, const PosRat& y) {
    return mul_multiple(y.num(), nth_root(x, y.den()));
}

MulReal pow(const MulReal& x, const PosReal& y) {
    if (y.exact()) return pow(x, *y.exact());

    // roots[k] = x^(1/2^k); powers[(k, j)] = x^(j/2^k)
    struct Chain {
        std::mutex mutex;
        std::vector<MulReal> roots;
        std::map<std::pair<unsigned, mpz_class>, MulReal> powers;
    };
    auto chain = std::make_shared<Chain>();
    chain->roots.push_back(x);
    auto power_at = [chain](unsigned k, const mpz_class& j) {
        std::lock_guard lock(chain->mutex);
        if (auto it = chain->powers.find({k, j}); it != chain->powers.end()) return it->second;
        while (chain->roots.size() <= k) chain->roots.push_back(nth_root(chain->roots.back(), Nat(2)));
        MulReal r = mul_multiple(Nat::from_mpz(j), chain->roots[k]);
        chain->powers.emplace(std::make_pair(k, j), r);
        return r;
    };

    const mpz_class bound = ceil_of(y.approx(0).hi().value()) + 1;
    const unsigned growth = bit_length(bound) * bit_length(ceil_of(x.value().approx(0).hi().value()) + 1);
    PosReal value(
        [x, y, power_at, growth](unsigned p) {
            // k is a multiple of 8 so that nearby precisions share their powers
            for (unsigned k = (p + growth + 11) / 8 * 8;; k += 8) {
                Interval iy = y.approx(k);
                mpz_class scale = mpz_class(1) << k;
                mpz_class jlo = floor_of(iy.lo().value() * scale);
                mpz_class jhi = ceil_of(iy.hi().value() * scale);
                mpq_class lo(1);
                if (jlo > 0) lo = power_at(k, jlo).value().approx(p + 2).lo().value();
                mpq_class hi = power_at(k, jhi).value().approx(p + 2).hi().value();
                if (hi - lo <= dyadic_unit(p)) return Interval(pos(lo), pos(hi));
                if (k > p + growth + (1u << 12))
                    fail(ErrorKind::oracle_failure, "power bracketing exhausted its budget");
            }
        },
        "pow(" + x.value().description() + ", " + y.description() + ")");
    return into_mul(value);
}

Ordering3<MulReal> mul_compare(const MulReal& x, const MulReal& y, unsigned max_p) {
    switch (real_compare_escalating(x.value(), y.value(), max_p)) {
    case RealOrder::less_certified:
        return Ordering3<MulReal>::less_by(into_mul(quotient(y.value(), x.value()).as_real(), max_p));
    case RealOrder::greater_certified:
        return Ordering3<MulReal>::greater_by(into_mul(quotient(x.value(), y.value()).as_real(), max_p));
    case RealOrder::overlap:
        break;
    }
    if (x.value().exact() && y.value().exact()) return Ordering3<MulReal>::equal();
    fail(ErrorKind::undecided, "cannot order " + x.value().description() + " and " + y.value().description() +
                                   " up to precision " + std::to_string(max_p));
}

PosReal real_root_of_rat(const PosRat& q, const Nat& n) {
    const unsigned long k = small_exponent(n);
    if (k == 1) return real_from_rat(q);
    mpz_class den_pow;
    mpz_pow_ui(den_pow.get_mpz_t(), q.den().value().get_mpz_t(), k - 1);
    const mpz_class radicand = q.num().value() * den_pow;
    const PosRat inv_den(Nat{}, q.den());
    if (radicand == 1) return real_from_rat(inv_den);
    PosReal r = root_of(real_from_rat(pos(mpq_class(radicand))), k);
    return real_scale(r, inv_den);
}

} // namespace magnitude
