#include <doctest.h>

#include "magnitude/magnitude.hpp"
#include "oracles.hpp"
#include "sampling.hpp"

using namespace magnitude;

namespace {

Element r(const char* text) { return Element(rat_parse(text)); }
Element real_of(const char* text) { return parse_element(ModelId::real, text); }

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

TEST_CASE("unit multiples") {
    const EmbeddingRepr phi = nat_embedding(r("3/4"));
    CHECK(phi.domain() == ModelId::nat);
    CHECK(phi.codomain() == ModelId::rat);
    CHECK(eval(phi, Element(Nat(5))).as_rat() == rat_parse("15/4"));
    for (std::uint64_t n = 1; n <= 200; n += 13)
        CHECK(eval(phi, Element(Nat(n))).as_rat() == eval_naive(phi, Nat(n)).as_rat());
    CHECK(kind_of([&] { eval(phi, r("1")); }) == ErrorKind::model_mismatch);
}

TEST_CASE("sums and compositions evaluate pointwise") {
    const EmbeddingRepr two = nat_embedding(Element(Nat(2)));
    const EmbeddingRepr three = nat_embedding(Element(Nat(3)));
    CHECK(eval(sum_embedding(two, three), Element(Nat(1))).as_nat() == Nat(5));
    CHECK(eval(sum_embedding(two, three), Element(Nat(4))).as_nat() == Nat(20));
    const EmbeddingRepr triple = anchor_embedding(Element(Nat(1)), Element(Nat(3)));
    CHECK(eval(compose_embedding(triple, two), Element(Nat(5))).as_nat() == Nat(30));
    CHECK(kind_of([&] { sum_embedding(two, nat_embedding(r("1"))); }) == ErrorKind::signature_mismatch);
    CHECK(kind_of([&] { compose_embedding(two, nat_embedding(r("1"))); }) == ErrorKind::signature_mismatch);
    CHECK(eval(identity_embedding(ModelId::rat), r("2/7")).as_rat() == rat_parse("2/7"));
}

TEST_CASE("anchors send a to a_prime") {
    const EmbeddingRepr phi = anchor_embedding(r("2"), real_of("1"));
    CHECK(phi.domain() == ModelId::rat);
    CHECK(phi.codomain() == ModelId::real);
    const PosReal image = eval(phi, r("3")).as_real();
    CHECK(image.approx(30).contains(rat_parse("3/2")));

    const EmbeddingRepr root = anchor_embedding(r("1"), real_of("sqrt(2)"));
    const Interval iv = eval(root, r("3")).as_real().approx(40);
    CHECK(iv.width_within(40));
    CHECK(oracle::brackets_sqrt(iv.lo().value(), iv.hi().value(), 18));

    CHECK(kind_of([] { anchor_embedding(Element(Nat(2)), Element(Nat(3))); }) == ErrorKind::unsupported_codomain);
    CHECK(kind_of([] { anchor_embedding(r("1"), Element(Nat(3))); }) == ErrorKind::unsupported_codomain);
    CHECK(kind_of([] { anchor_embedding(real_of("sqrt(2)"), real_of("1")); }) == ErrorKind::unsupported_domain);
    CHECK(kind_of([] { anchor_embedding(real_of("2"), r("1")); }) == ErrorKind::unsupported_codomain);
    CHECK(eval(anchor_embedding(Element(Nat(2)), Element(Nat(6))), Element(Nat(5))).as_nat() == Nat(15));
}

TEST_CASE("fourth proportional") {
    const PosReal x = fourth_proportional(r("2"), r("3"), real_from_rat(rat_parse("1")));
    CHECK(x.approx(30).contains(rat_parse("3/2")));
    const PosReal y = fourth_proportional(r("2"), r("3"), real_root_of_rat(rat_parse("2"), Nat(2)));
    for (unsigned p : {8u, 30u, 53u}) {
        const Interval iv = y.approx(p);
        CHECK(iv.width_within(p));
        // 3 sqrt(2) / 2 = sqrt(9/2)
        CHECK(iv.lo().value() * iv.lo().value() <= mpq_class(9, 2));
        CHECK(iv.hi().value() * iv.hi().value() >= mpq_class(9, 2));
    }
    const PosReal z = fourth_proportional(Element(Nat(7)), Element(Nat(3)), real_root_of_rat(rat_parse("3"), Nat(2)));
    const Interval iv = z.approx(53);
    CHECK(iv.width_within(53));
    // 3 sqrt 3 / 7 = sqrt(27/49)
    CHECK(iv.lo().value() * iv.lo().value() <= mpq_class(27, 49));
    CHECK(iv.hi().value() * iv.hi().value() >= mpq_class(27, 49));
}

TEST_CASE("embeddings are homomorphisms") {
    for (const auto& phi : {nat_embedding(r("3/4")), anchor_embedding(r("2/3"), r("5")),
                            sum_embedding(identity_embedding(ModelId::rat), anchor_embedding(r("1"), r("1/2")))}) {
        const HomCheckReport report = check_homomorphism(phi, 300, 9);
        CHECK(report.passed());
        CHECK(report.samples == 300);
    }
}

TEST_CASE("check_homomorphism rejects an affine map and shrinks the pair") {
    const ElementMap affine = [](const Element& x) { return combine(x, r("1")); };
    const HomCheckReport report = check_homomorphism(affine, ModelId::rat, 100, 3);
    REQUIRE_FALSE(report.passed());
    CHECK(report.failure->property == "additivity");
    CHECK(report.failure->a.as_rat() == rat_parse("1"));
    CHECK(report.failure->b.as_rat() == rat_parse("1"));
    CHECK(report.samples == 1);

    const ElementMap reversing = [](const Element& x) { return Element(PosRat(Nat{}) / x.as_rat()); };
    CHECK_FALSE(check_homomorphism(reversing, ModelId::rat, 100, 3).passed());
}

TEST_CASE("embeddings agreeing on one element agree everywhere") {
    detail::SampleSource src(5);
    for (int i = 0; i < 50; ++i) {
        const PosRat a = src.rat(6), a_prime = src.rat(6);
        const EmbeddingRepr phi = anchor_embedding(Element(a), Element(a_prime));
        const EmbeddingRepr chi = anchor_embedding(Element(PosRat(Nat{})), Element(a_prime / a));
        for (int k = 0; k < 3; ++k) {
            const Element probe(src.rat(6));
            CHECK(embeddings_compare(phi, chi, probe) == OrderTag::equal);
        }
    }
    const EmbeddingRepr larger = anchor_embedding(r("1"), r("2"));
    CHECK(embeddings_compare(larger, identity_embedding(ModelId::rat), r("5")) == OrderTag::greater);
}

TEST_CASE("JSON round trip") {
    const EmbeddingRepr phi = sum_embedding(anchor_embedding(r("1"), real_of("sqrt(2)")),
                                            compose_embedding(identity_embedding(ModelId::real),
                                                              anchor_embedding(r("2/3"), real_of("root(5,3)"))));
    const nlohmann::json j = to_json(phi);
    const EmbeddingRepr back = embedding_from_json(j);
    CHECK(to_json(back) == j);
    CHECK(back.describe() == phi.describe());
    CHECK(embedding_from_json(to_json(nat_embedding(Element(Nat(4))))).codomain() == ModelId::nat);

    CHECK(kind_of([] { embedding_from_json(nlohmann::json::parse(R"({"tag":"warp"})")); }) == ErrorKind::parse);
    CHECK(kind_of([] { embedding_from_json(nlohmann::json::parse(R"({"tag":"identity"})")); }) == ErrorKind::parse);
    CHECK(kind_of([] { embedding_from_json(nlohmann::json::parse(R"([1,2])")); }) == ErrorKind::parse);
}
