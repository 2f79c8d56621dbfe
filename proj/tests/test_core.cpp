#include <doctest.h>

#include "magnitude/magnitude.hpp"
#include "oracles.hpp"
#include "sampling.hpp"

using namespace magnitude;

namespace {

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

PosRat q(const char* text) { return rat_parse(text); }

} // namespace

TEST_CASE("subtract returns the witness difference") {
    CHECK(subtract(q("7/3"), q("1/2")) == q("11/6"));
    CHECK(subtract(Nat(9), Nat(4)) == Nat(5));
    CHECK(kind_of([] { subtract(q("1/2"), q("7/3")); }) == ErrorKind::not_greater);
    CHECK(kind_of([] { subtract(q("1/2"), q("1/2")); }) == ErrorKind::not_greater);
    CHECK(kind_of([] { subtract(Nat(3), Nat(3)); }) == ErrorKind::not_greater);
}

TEST_CASE("compare carries the difference") {
    const auto o = compare(q("2/3"), q("5/6"));
    CHECK(o.tag() == OrderTag::less);
    CHECK(o.difference() == q("1/6"));
    const auto g = compare(Nat(10), Nat(4));
    CHECK(g.tag() == OrderTag::greater);
    CHECK(g.difference() == Nat(6));
    const auto e = compare(q("2/4"), q("1/2"));
    CHECK(e.is_equal());
    CHECK(kind_of([&] { (void)e.difference(); }) == ErrorKind::invalid_argument);
}

TEST_CASE("trichotomy holds on random rationals") {
    detail::SampleSource src(7);
    for (int i = 0; i < 500; ++i) {
        const PosRat a = src.rat(), b = src.rat();
        const auto o = compare(a, b);
        const int sign = cmp(a.value(), b.value());
        switch (o.tag()) {
        case OrderTag::less:
            CHECK(sign < 0);
            CHECK(a + o.difference() == b);
            break;
        case OrderTag::greater:
            CHECK(sign > 0);
            CHECK(b + o.difference() == a);
            break;
        case OrderTag::equal: CHECK(sign == 0); break;
        }
    }
}

TEST_CASE("multiple agrees with the literal recursion") {
    CHECK(multiple(Nat(5), q("3/4")) == q("15/4"));
    CHECK(multiple(Nat(1), q("3/4")) == q("3/4"));
    CHECK(multiple(Nat(7), Nat(3)) == Nat(21));
    for (std::uint64_t n = 1; n <= 300; n += 7) {
        CHECK(multiple(Nat(n), q("5/9")) == multiple_naive(Nat(n), q("5/9")));
        CHECK(multiple(Nat(n), q("5/9")).value() == mpq_class(5 * n) / 9);
    }
    CHECK(kind_of([] { multiple_naive(Nat(70000), q("1/2")); }) == ErrorKind::guard_exceeded);
}

TEST_CASE("multiple handles large n") {
    const Nat n = nat_make("1000000000000000000000");
    CHECK(multiple(n, q("1/3")).value() == mpq_class(n.value(), 3));
}

TEST_CASE("find_multiple_exceeding is the least exceeding multiple") {
    CHECK(find_multiple_exceeding(q("1/3"), q("2")) == Nat(7));
    CHECK(find_multiple_exceeding(Nat(2), Nat(9)) == Nat(5));
    CHECK(find_multiple_exceeding(Nat(2), Nat(1)) == Nat(1));
    CHECK(find_multiple_exceeding(q("1/2"), q("1")) == Nat(3));
    detail::SampleSource src(11);
    for (int i = 0; i < 200; ++i) {
        const PosRat a = src.rat(8), b = src.rat(8);
        CHECK(find_multiple_exceeding(a, b).to_u64() == oracle::least_multiple(a.value(), b.value()));
    }
}

TEST_CASE("shrink_below") {
    const PosRat b = shrink_below(q("2/5"), Nat(10));
    CHECK(b == q("2/55"));
    CHECK(multiple(Nat(10), b) < q("2/5"));
    CHECK(kind_of([] { shrink_below(Nat(5), Nat(2)); }) == ErrorKind::discrete_model);
    const PosReal r = shrink_below(real_root_of_rat(q("2"), Nat(2)), Nat(4));
    CHECK(real_compare(multiple(Nat(4), r), real_root_of_rat(q("2"), Nat(2)), 30) ==
          RealOrder::less_certified);
}

TEST_CASE("elements dispatch on their model") {
    const Element a(q("1/2")), b(q("1/3"));
    CHECK(combine(a, b).as_rat() == q("5/6"));
    CHECK(compare(a, b).tag() == OrderTag::greater);
    CHECK(kind_of([&] { combine(a, Element(Nat(2))); }) == ErrorKind::model_mismatch);
    CHECK(kind_of([] { compare(Element(real_from_rat(q("1"))), Element(real_from_rat(q("2")))); }) ==
          ErrorKind::inexact_model);
    CHECK(kind_of([] { shrink_below(Element(Nat(3)), Nat(2)); }) == ErrorKind::discrete_model);
    CHECK(element_from_value(ModelId::nat, q("4")).as_nat() == Nat(4));
    CHECK_THROWS_AS(element_from_value(ModelId::nat, q("1/2")), MagnitudeError);
    CHECK(to_real(Element(Nat(3))).exact() == q("3"));
}
