#include <doctest.h>

#include "magnitude/magnitude.hpp"
#include "oracles.hpp"
#include "sampling.hpp"
#include "stern_brocot.hpp"

using namespace magnitude;

namespace {

Element r(const char* text) { return Element(rat_parse(text)); }
Element sqrt_elem(unsigned n) { return Element(real_root_of_rat(PosRat(Nat(n)), Nat(2))); }
Element real_int(std::uint64_t n) { return Element(real_from_rat(PosRat(Nat(n)))); }

/// ma > nb and ma2 <= nb2, by exact arithmetic.
bool witness_holds(const Witness& w, const mpq_class& a, const mpq_class& b, const mpq_class& a2,
                   const mpq_class& b2) {
    const mpz_class& m = w.m.value();
    const mpz_class& n = w.n.value();
    return m * a > n * b && m * a2 <= n * b2;
}

} // namespace

TEST_CASE("ratio of 3:2 against 4:3") {
    const RatioRel rel = ratio_compare(r("3"), r("2"), r("4"), r("3"));
    REQUIRE(rel.verdict == RatioVerdict::greater);
    REQUIRE(rel.witness);
    CHECK(*rel.witness == Witness{Nat(3), Nat(4)});
    CHECK(rel.witness->to_string() == "m=3 n=4");
    CHECK(witness_holds(*rel.witness, 3, 2, 4, 3));
    // no smaller m admits any n
    for (unsigned m = 1; m < 3; ++m)
        for (unsigned n = 1; n <= 4 * m; ++n) CHECK_FALSE(witness_holds(Witness{Nat(m), Nat(n)}, 3, 2, 4, 3));
}

TEST_CASE("less carries the swapped witness") {
    const RatioRel rel = ratio_compare(r("4"), r("3"), r("3"), r("2"));
    REQUIRE(rel.verdict == RatioVerdict::less);
    CHECK(witness_holds(*rel.witness, 3, 2, 4, 3));
    CHECK(verify_witness(*rel.witness, r("3"), r("2"), r("4"), r("3")));
}

TEST_CASE("equal ratios across exact models") {
    CHECK(ratio_compare(r("1/2"), r("1/3"), r("3"), r("2")).verdict == RatioVerdict::equal);
    CHECK(ratio_compare(Element(Nat(6)), Element(Nat(4)), r("3/4"), r("1/2")).verdict == RatioVerdict::equal);
    CHECK(ratio_value_exact(Ratio(Element(Nat(6)), Element(Nat(4)))) == rat_parse("3/2"));
    CHECK_THROWS_AS(ratio_value_exact(Ratio(sqrt_elem(2), sqrt_elem(3))), MagnitudeError);
}

TEST_CASE("random exact ratios agree with cross-multiplication") {
    detail::SampleSource src(2024);
    for (int i = 0; i < 1000; ++i) {
        const PosRat a = src.rat(10), b = src.rat(10), a2 = src.rat(10), b2 = src.rat(10);
        const RatioRel rel = ratio_compare(Element(a), Element(b), Element(a2), Element(b2));
        const int sign = oracle::ratio_sign(a.value(), b.value(), a2.value(), b2.value());
        if (sign == 0) {
            CHECK(rel.verdict == RatioVerdict::equal);
        } else if (sign > 0) {
            REQUIRE(rel.verdict == RatioVerdict::greater);
            CHECK(witness_holds(*rel.witness, a.value(), b.value(), a2.value(), b2.value()));
        } else {
            REQUIRE(rel.verdict == RatioVerdict::less);
            CHECK(witness_holds(*rel.witness, a2.value(), b2.value(), a.value(), b.value()));
        }
    }
}

TEST_CASE("have_ratio_witness finds the least multiples") {
    CHECK(have_ratio_witness(r("1/2"), r("5")) == std::pair{Nat(11), Nat(1)});
    CHECK(have_ratio_witness(r("3"), r("3")) == std::pair{Nat(2), Nat(2)});
    CHECK(have_ratio_witness(Element(Nat(2)), Element(Nat(9))) == std::pair{Nat(5), Nat(1)});
    const auto [m, n] = have_ratio_witness(sqrt_elem(2), real_int(1));
    CHECK(m == Nat(1));
    CHECK(n == Nat(2));
    try {
        have_ratio_witness(sqrt_elem(2), r("1"));
        FAIL("expected model_mismatch");
    } catch (const MagnitudeError& e) {
        CHECK(e.kind() == ErrorKind::model_mismatch);
    }
}

TEST_CASE("verify_witness") {
    CHECK(verify_witness(Witness{Nat(3), Nat(4)}, r("3"), r("2"), r("4"), r("3")));
    CHECK_FALSE(verify_witness(Witness{Nat(4), Nat(3)}, r("3"), r("2"), r("4"), r("3")));
    CHECK_FALSE(verify_witness(Witness{Nat(1), Nat(1)}, r("3"), r("2"), r("4"), r("3")));
    CHECK(verify_witness(Witness{Nat(7), Nat(10)}, r("3"), r("2"), sqrt_elem(2), real_int(1)));
    // 10 sqrt 2 > 14 certifies only the first leg of the reversed claim
    CHECK_FALSE(verify_witness(Witness{Nat(10), Nat(14)}, sqrt_elem(2), real_int(1), r("3"), r("2")));
}

TEST_CASE("real ratios are separated by certified multiples") {
    const RatioRel rel = ratio_compare(sqrt_elem(2), real_int(1), r("3"), r("2"));
    REQUIRE(rel.verdict == RatioVerdict::less);
    CHECK(*rel.witness == Witness{Nat(7), Nat(10)});
    CHECK(verify_witness(*rel.witness, r("3"), r("2"), sqrt_elem(2), real_int(1)));

    const RatioRel close = ratio_compare(sqrt_elem(3), real_int(1), sqrt_elem(2), real_int(1));
    CHECK(close.verdict == RatioVerdict::greater);
}

TEST_CASE("equal real ratios exhaust the fuel") {
    const RatioRel rel = ratio_compare(sqrt_elem(2), real_int(1), sqrt_elem(8), real_int(2), 32);
    CHECK(rel.verdict == RatioVerdict::unknown);
    CHECK_FALSE(rel.witness);
    CHECK(rel.fuel_spent <= 32);
}

TEST_CASE("upgrade_boundary_witness makes both legs strict") {
    // 2*1 > 1*1 and 2*1 = 1*2 on the second ratio
    const Witness w = upgrade_boundary_witness(Witness{Nat(2), Nat(1)}, r("1"), r("1"), r("1"), r("2"));
    CHECK(w.m.value() * 1 > w.n.value() * 1);
    CHECK(w.m.value() * 1 < w.n.value() * 2);
}

TEST_CASE("precision cap grows with fuel") {
    CHECK(precision_cap(0) == 64);
    CHECK(precision_cap(64) == 192);
    CHECK(precision_cap(std::uint64_t{1} << 40) == 4096);
}

TEST_CASE("Stern-Brocot search locates a rational in logarithmic probes") {
    const mpq_class target(355, 113);
    auto probe = [&](const detail::Fraction& f) {
        const int s = cmp(target, mpq_class(f.n, f.m));
        return s > 0 ? detail::Probe::go_right : s < 0 ? detail::Probe::go_left : detail::Probe::hit;
    };
    const auto out = detail::stern_brocot_search(probe, 200);
    REQUIRE(out.hit);
    CHECK(out.hit->n == 355);
    CHECK(out.hit->m == 113);
    // 355/113 = [3; 7, 16]
    CHECK(out.probes <= 20);

    const mpq_class big(1000000, 1);
    auto probe_big = [&](const detail::Fraction& f) {
        const int s = cmp(big, mpq_class(f.n, f.m));
        return s > 0 ? detail::Probe::go_right : s < 0 ? detail::Probe::go_left : detail::Probe::hit;
    };
    const auto far = detail::stern_brocot_search(probe_big, 200);
    REQUIRE(far.hit);
    CHECK(far.probes <= 45);
}

TEST_CASE("Stern-Brocot search respects its budget and brackets the target") {
    // sqrt 2 is never hit
    auto probe = [](const detail::Fraction& f) {
        return f.n * f.n > 2 * f.m * f.m ? detail::Probe::go_left : detail::Probe::go_right;
    };
    const auto out = detail::stern_brocot_search(probe, 30);
    CHECK(out.exhausted);
    CHECK(out.probes == 30);
    CHECK(out.left.n * out.left.n < 2 * out.left.m * out.left.m);
    CHECK(out.right.n * out.right.n > 2 * out.right.m * out.right.m);
}
