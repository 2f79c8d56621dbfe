#include <doctest.h>

#include <thread>
#include <vector>

#include "magnitude/magnitude.hpp"
#include "oracles.hpp"

using namespace magnitude;

namespace {

PosReal sqrt_of(unsigned n) { return real_root_of_rat(PosRat(Nat(n)), Nat(2)); }

} // namespace

TEST_CASE("rationals are exact points") {
    const PosReal third = real_from_rat(rat_parse("1/3"));
    CHECK(third.approx(10) == Interval(rat_parse("1/3")));
    CHECK(third.approx(2).contains(rat_parse("1/3")));
    for (unsigned p : {0u, 5u, 50u}) {
        CHECK(real_from_rat(PosRat(Nat(2))).approx(p).contains(PosRat(Nat(2))));
        CHECK(real_add(third, real_from_rat(rat_parse("2/3"))).approx(p).contains(PosRat(Nat(1))));
    }
}

TEST_CASE("sqrt(2) refinements bracket the integer square root oracle") {
    const PosReal r = sqrt_of(2);
    for (unsigned p : {4u, 20u, 64u, 200u}) {
        const Interval iv = r.approx(p);
        CHECK(iv.width_within(p));
        CHECK(oracle::brackets_sqrt(iv.lo().value(), iv.hi().value(), 2));
    }
}

TEST_CASE("lazy sum meets the width contract") {
    const PosReal s = real_add(sqrt_of(2), sqrt_of(2));
    const Interval iv = s.approx(20);
    CHECK(iv.width_within(20));
    // 2 sqrt(2) = sqrt(8)
    CHECK(oracle::brackets_sqrt(iv.lo().value(), iv.hi().value(), 8));
}

TEST_CASE("lazy product and scale") {
    const PosReal two = real_mul(sqrt_of(2), sqrt_of(2));
    const Interval iv = two.approx(30);
    CHECK(iv.width_within(30));
    CHECK(iv.contains(PosRat(Nat(2))));

    const PosReal scaled = real_scale(sqrt_of(2), PosRat(Nat(3)));
    const Interval sv = scaled.approx(30);
    CHECK(sv.width_within(30));
    CHECK(oracle::brackets_sqrt(sv.lo().value(), sv.hi().value(), 18));
}

TEST_CASE("certified comparison") {
    CHECK(real_compare(real_from_rat(rat_parse("1/3")), real_from_rat(rat_parse("1/2")), 4) ==
          RealOrder::less_certified);
    CHECK(real_compare(sqrt_of(2), real_from_rat(rat_parse("3/2")), 8) == RealOrder::less_certified);
    const PosReal x = sqrt_of(3);
    for (unsigned p : {0u, 8u, 100u}) CHECK(real_compare(x, x, p) == RealOrder::overlap);
    CHECK(real_compare_escalating(sqrt_of(3), sqrt_of(2), 64) == RealOrder::greater_certified);
}

TEST_CASE("certified subtraction") {
    const PosReal d = real_subtract(sqrt_of(3), sqrt_of(2), 256);
    const Interval iv = d.approx(40);
    CHECK(iv.width_within(40));
    // sqrt 3 - sqrt 2 lies in (0.3178, 0.3179)
    CHECK(iv.lo().value() > mpq_class(3178, 10000));
    CHECK(iv.hi().value() < mpq_class(3179, 10000));
    CHECK_THROWS_AS(real_subtract(sqrt_of(2), sqrt_of(3), 256), MagnitudeError);
    try {
        real_subtract(sqrt_of(2), sqrt_of(2), 64);
        FAIL("overlap must not be certified");
    } catch (const MagnitudeError& e) {
        CHECK(e.kind() == ErrorKind::undecided);
    }
}

TEST_CASE("oracles that break the width contract are rejected") {
    const PosReal bad([](unsigned) { return Interval(PosRat(Nat(1)), PosRat(Nat(2))); }, "bad");
    try {
        bad.approx(3);
        FAIL("expected oracle_failure");
    } catch (const MagnitudeError& e) {
        CHECK(e.kind() == ErrorKind::oracle_failure);
    }
}

TEST_CASE("refinements are memoized") {
    int calls = 0;
    const PosReal counted(
        [&calls](unsigned p) {
            ++calls;
            const mpq_class u = dyadic_unit(p);
            return Interval(PosRat::from_mpq(mpq_class(1) - u / 2), PosRat::from_mpq(mpq_class(1) + u / 2));
        },
        "one");
    const Interval first = counted.approx(16);
    CHECK(counted.approx(16) == first);
    CHECK(calls == 1);
}

TEST_CASE("concurrent refinement is consistent") {
    const PosReal r = sqrt_of(5);
    std::vector<Interval> seen(8, Interval(PosRat{}));
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < seen.size(); ++i)
        threads.emplace_back([&, i] { seen[i] = r.approx(96); });
    for (auto& t : threads) t.join();
    for (const auto& iv : seen) CHECK(iv == seen.front());
}

TEST_CASE("solve_increasing brackets the root") {
    // root of c^3 = 10
    const Classifier classify = [](const mpq_class& c, unsigned) {
        const mpq_class cube = c * c * c;
        return cube < 10 ? Side::below : cube > 10 ? Side::above : Side::hit;
    };
    const Interval iv = solve_increasing(classify, mpq_class(1), mpq_class(10), 30, 8);
    CHECK(iv.width_within(30));
    CHECK(iv.lo().value() * iv.lo().value() * iv.lo().value() <= 10);
    CHECK(iv.hi().value() * iv.hi().value() * iv.hi().value() >= 10);
}
