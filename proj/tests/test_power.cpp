#include <doctest.h>

#include "magnitude/magnitude.hpp"
#include "oracles.hpp"

using namespace magnitude;

namespace {

MulReal mul_of(const char* text) { return into_mul(real_from_rat(rat_parse(text))); }
MulReal mul_sqrt(unsigned n) { return into_mul(real_root_of_rat(PosRat(Nat(n)), Nat(2))); }

template <class F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const MagnitudeError& e) {
        return e.kind();
    }
    FAIL("expected a MagnitudeError");
    return ErrorKind::invalid_argument;
}

} // namespace

TEST_CASE("into_mul admits only values above one") {
    CHECK(kind_of([] { mul_of("1"); }) == ErrorKind::not_above_one);
    CHECK(kind_of([] { mul_of("1/2"); }) == ErrorKind::not_above_one);
    CHECK(mul_of("3/2").certified_above_one() == 0);
    // 1 + 2^-20 needs a refinement finer than the unit interval
    const PosReal near_one([](unsigned p) {
        const mpq_class c = mpq_class(1) + dyadic_unit(20);
        const mpq_class u = dyadic_unit(p + 1);
        return Interval(PosRat::from_mpq(c - u), PosRat::from_mpq(c + u));
    }, "1 + 2^-20");
    const MulReal m = into_mul(near_one);
    CHECK(near_one.approx(m.certified_above_one()).lo().value() > 1);
}

TEST_CASE("multiples are powers") {
    const MulReal x = mul_multiple(Nat(10), mul_of("3/2"));
    REQUIRE(x.value().exact());
    CHECK(*x.value().exact() == rat_parse("59049/1024"));
    CHECK(*mul_multiple(Nat(3), mul_of("2")).value().exact() == rat_parse("8"));
    for (unsigned n = 1; n <= 40; n += 3)
        CHECK(mul_multiple(Nat(n), mul_of("5/3")).value().exact()->value() == oracle::power(mpq_class(5, 3), n));
    CHECK(combine(mul_of("2"), mul_of("3")).value().exact() == rat_parse("6"));
}

TEST_CASE("roots") {
    CHECK(*nth_root(mul_of("8"), Nat(3)).value().exact() == rat_parse("2"));
    CHECK(*nth_root(mul_of("81/16"), Nat(4)).value().exact() == rat_parse("3/2"));
    CHECK(nth_root(mul_of("7"), Nat(1)).value().exact() == rat_parse("7"));
    const Interval iv = nth_root(mul_of("2"), Nat(2)).value().approx(64);
    CHECK(iv.width_within(64));
    CHECK(oracle::brackets_sqrt(iv.lo().value(), iv.hi().value(), 2));
    const Interval cube = nth_root(mul_of("10"), Nat(3)).value().approx(40);
    CHECK(oracle::power(cube.lo().value(), 3) <= 10);
    CHECK(oracle::power(cube.hi().value(), 3) >= 10);
    const Interval twice = nth_root(mul_sqrt(2), Nat(2)).value().approx(40);
    CHECK(oracle::power(twice.lo().value(), 4) <= 2);
    CHECK(oracle::power(twice.hi().value(), 4) >= 2);
}

TEST_CASE("rational exponents") {
    const Interval iv = pow(mul_of("2"), rat_parse("1/2")).value().approx(40);
    const auto [lo, hi] = oracle::sqrt_bracket(2, 40);
    CHECK(iv.width_within(40));
    CHECK(iv.lo().value() >= lo - dyadic_unit(40));
    CHECK(iv.hi().value() <= hi + dyadic_unit(40));
    CHECK(oracle::brackets_sqrt(iv.lo().value(), iv.hi().value(), 2));
    CHECK(*pow(mul_of("4"), rat_parse("3/2")).value().exact() == rat_parse("8"));
    const Interval two_thirds = pow(mul_of("3"), rat_parse("2/3")).value().approx(40);
    CHECK(oracle::power(two_thirds.lo().value(), 3) <= 9);
    CHECK(oracle::power(two_thirds.hi().value(), 3) >= 9);
}

TEST_CASE("real exponents") {
    const PosReal half = real_from_rat(rat_parse("1/2"));
    const Interval exact_path = pow(mul_of("2"), half).value().approx(40);
    CHECK(oracle::brackets_sqrt(exact_path.lo().value(), exact_path.hi().value(), 2));

    // 2^sqrt(2) = 2.6651441426902251886502972498731...
    const Interval iv = pow(mul_of("2"), real_root_of_rat(rat_parse("2"), Nat(2))).value().approx(40);
    CHECK(iv.width_within(40));
    CHECK(iv.contains(mpq_class("26651441426902251886502972498731/10000000000000000000000000000000")));
}

TEST_CASE("multiplicative comparison") {
    const auto o = mul_compare(mul_of("2"), mul_of("3"));
    REQUIRE(o.tag() == OrderTag::less);
    CHECK(*o.difference().value().exact() == rat_parse("3/2"));
    CHECK(mul_compare(mul_of("4"), mul_of("4")).is_equal());
    CHECK(mul_compare(mul_sqrt(3), mul_sqrt(2)).tag() == OrderTag::greater);
    CHECK(kind_of([] { mul_compare(mul_sqrt(2), mul_sqrt(2), 64); }) == ErrorKind::undecided);
}
