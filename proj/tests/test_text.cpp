#include <doctest.h>

#include "magnitude/magnitude.hpp"

using namespace magnitude;

namespace {

ErrorKind parse_error_kind(ModelId m, const char* text) {
    try {
        parse_element(m, text);
    } catch (const MagnitudeError& e) {
        return e.kind();
    }
    FAIL("expected a parse failure");
    return ErrorKind::invalid_argument;
}

} // namespace

TEST_CASE("parse_element per model") {
    CHECK(parse_element(ModelId::nat, " 12 ").as_nat() == Nat(12));
    CHECK(parse_element(ModelId::rat, "6/4").as_rat() == rat_parse("3/2"));
    CHECK(parse_element(ModelId::real, "3/4").as_real().exact() == rat_parse("3/4"));
    const PosReal s = parse_element(ModelId::real, "sqrt(2)").as_real();
    CHECK(s.description() == "sqrt(2)");
    CHECK_FALSE(s.exact());
    CHECK(parse_element(ModelId::real, "sqrt(9/4)").as_real().exact() == rat_parse("3/2"));
    CHECK(parse_element(ModelId::real, "root(8, 3)").as_real().exact() == rat_parse("2"));

    CHECK(parse_error_kind(ModelId::nat, "1/2") == ErrorKind::parse);
    CHECK(parse_error_kind(ModelId::real, "sqrt(2") == ErrorKind::parse);
    CHECK(parse_error_kind(ModelId::real, "root(2)") == ErrorKind::parse);
    CHECK(parse_error_kind(ModelId::real, "pi") == ErrorKind::parse);
}

TEST_CASE("format_real") {
    const PosReal s = parse_element(ModelId::real, "sqrt(2)").as_real();
    CHECK(format_real(s, 40) == "1.414213562373 ± 2^-40");
    CHECK(format_real(s, 10) == "1.414 ± 2^-10");
    CHECK(format_real(s, 0) == "1 ± 2^-0");
    CHECK(format_real(real_from_rat(rat_parse("15")), 30) == "15/1");
    // a symmetric oracle around 1/4 puts the midpoint on a tie, which rounds up
    const PosReal quarter([](unsigned p) {
        const mpq_class u = dyadic_unit(p + 1);
        return Interval(PosRat::from_mpq(mpq_class(1, 4) - u), PosRat::from_mpq(mpq_class(1, 4) + u));
    }, "quarter");
    CHECK(format_real(quarter, 1) == "0.3 ± 2^-1");
}

TEST_CASE("formatted values lie within the stated error") {
    const PosReal s = parse_element(ModelId::real, "sqrt(3)").as_real();
    for (unsigned p : {8u, 20u, 53u, 100u}) {
        const std::string text = format_real(s, p);
        const std::string digits = text.substr(0, text.find(' '));
        const auto dot = digits.find('.');
        const std::string whole = digits.substr(0, dot) + digits.substr(dot + 1);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits.size() - dot - 1);
        const mpq_class shown(mpz_class(whole), scale);
        // |shown - sqrt 3| <= 2^-p, checked by squaring the bracket
        const mpq_class lo = shown - dyadic_unit(p), hi = shown + dyadic_unit(p);
        CHECK(lo * lo <= 3);
        CHECK(hi * hi >= 3);
    }
}

TEST_CASE("JSON forms") {
    CHECK(element_to_json(Element(rat_parse("3/2")), 30) == nlohmann::json{{"model", "rat"}, {"value", "3/2"}});
    CHECK(element_to_json(Element(Nat(9)), 30) == nlohmann::json{{"model", "nat"}, {"value", "9"}});
    const nlohmann::json j = element_to_json(parse_element(ModelId::real, "sqrt(2)"), 20);
    CHECK(j["model"] == "real");
    CHECK(j["value"]["precision"] == 20);
    const mpq_class lo(j["value"]["lo"].get<std::string>()), hi(j["value"]["hi"].get<std::string>());
    CHECK(lo * lo <= 2);
    CHECK(hi * hi >= 2);
    CHECK(hi - lo <= dyadic_unit(20));
    CHECK(j["value"]["mid"] == format_real(parse_element(ModelId::real, "sqrt(2)").as_real(), 20));
}
