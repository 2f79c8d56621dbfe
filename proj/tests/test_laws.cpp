#include <doctest.h>

#include <algorithm>
#include <set>

#include "magnitude/magnitude.hpp"

using namespace magnitude;

namespace {

SuiteOptions options_for(LawSet set, ModelId model, std::uint64_t trials) {
    SuiteOptions o;
    o.set = set;
    o.model = model;
    o.trials = trials;
    return o;
}

const LawInfo& info(const std::string& id) {
    const auto& laws = list_laws();
    auto it = std::find_if(laws.begin(), laws.end(), [&](const LawInfo& l) { return l.id == id; });
    REQUIRE(it != laws.end());
    return *it;
}

LawHooks broken_subtract() {
    LawHooks hooks = LawHooks::standard();
    hooks.subtract = [base = hooks.subtract](const Element& b, const Element& a) {
        const Element d = base(b, a);
        return combine(d, element_from_value(d.model(), PosRat(Nat{})));
    };
    return hooks;
}

LawHooks broken_witness() {
    LawHooks hooks = LawHooks::standard();
    hooks.verify_witness = [base = hooks.verify_witness](const Witness& w, const Element& a, const Element& b,
                                                         const Element& a2, const Element& b2) {
        return !base(w, a, b, a2, b2);
    };
    return hooks;
}

} // namespace

TEST_CASE("registry") {
    const auto& laws = list_laws();
    std::set<std::string> ids;
    for (const auto& l : laws) {
        CHECK(ids.insert(l.id).second);
        CHECK_FALSE(l.anchor.empty());
        CHECK_FALSE(l.models.empty());
    }
    const auto v_count = std::count_if(laws.begin(), laws.end(), [](const LawInfo& l) { return l.set == LawSet::euclid_v; });
    CHECK(v_count == 24);
    CHECK(info("V.16-alternation").anchor == "Prop. V.16: If a:b=c:d, then a:c=b:d");
    CHECK(info("V.12-sum-of-proportionals").anchor == "Prop. V.12: If a:b=c:d, then a:b=(a+c):(b+d)");
    CHECK(info("core.discrete-gap").models == std::vector<ModelId>{ModelId::nat});
    for (LawSet s : all_law_sets()) CHECK(parse_law_set(to_string(s)) == s);
    CHECK_THROWS_AS(parse_law_set("all"), MagnitudeError);
}

TEST_CASE("exact models pass every set") {
    for (ModelId m : {ModelId::nat, ModelId::rat}) {
        for (LawSet s : all_law_sets()) {
            if (s == LawSet::power) continue;
            for (const LawReport& r : run_suite(options_for(s, m, 100))) {
                INFO(r.law_id, " on ", to_string(m));
                CHECK(r.passed());
                CHECK(r.trials == 100);
                CHECK_FALSE(r.tolerance.precision);
            }
        }
    }
}

TEST_CASE("power laws pass on their grid") {
    for (const LawReport& r : run_suite(options_for(LawSet::power, ModelId::real, 8))) {
        INFO(r.law_id);
        CHECK(r.passed());
    }
}

TEST_CASE("real model passes the additive sets") {
    for (LawSet s : {LawSet::core_axioms, LawSet::euclid_v, LawSet::models}) {
        for (const LawReport& r : run_suite(options_for(s, ModelId::real, 10))) {
            INFO(r.law_id);
            CHECK(r.passed());
            CHECK(r.tolerance.precision == 40u);
        }
    }
}

TEST_CASE("suites are deterministic in the seed") {
    SuiteOptions o = options_for(LawSet::euclid_v, ModelId::rat, 50);
    o.hooks = broken_subtract();
    const auto first = run_suite(o);
    const auto second = run_suite(o);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(to_json(first[i]) == to_json(second[i]));
}

TEST_CASE("a broken subtraction is caught and shrunk") {
    SuiteOptions o = options_for(LawSet::euclid_v, ModelId::rat, 200);
    o.hooks = broken_subtract();
    const LawReport r = run_law("V.17-separation", o);
    REQUIRE_FALSE(r.passed());
    const LawFailure& f = r.failures.front();
    CHECK_FALSE(f.inputs.empty());
    // shrinking drives every input towards 1/1
    for (const auto& in : f.inputs) CHECK(in.size() <= 5);
    CHECK(f.observed != f.expected);

    SuiteOptions core = options_for(LawSet::core_axioms, ModelId::nat, 50);
    core.hooks = broken_subtract();
    const auto reports = run_suite(core);
    CHECK(std::any_of(reports.begin(), reports.end(), [](const LawReport& x) { return !x.passed(); }));
}

TEST_CASE("a broken witness check is caught") {
    SuiteOptions o = options_for(LawSet::ratio, ModelId::rat, 50);
    o.hooks = broken_witness();
    const auto reports = run_suite(o);
    CHECK(std::any_of(reports.begin(), reports.end(), [](const LawReport& x) { return !x.passed(); }));
}

TEST_CASE("run_law rejects unknown ids and uncovered models") {
    const SuiteOptions o = options_for(LawSet::core_axioms, ModelId::rat, 5);
    CHECK_THROWS_AS(run_law("V.99", o), MagnitudeError);
    CHECK_THROWS_AS(run_law("core.discrete-gap", o), MagnitudeError);
    CHECK(run_law("core.comm", o).passed());
}

TEST_CASE("report JSON") {
    const LawReport r = run_law("core.comm", options_for(LawSet::core_axioms, ModelId::rat, 5));
    const nlohmann::json j = to_json(r);
    CHECK(j["lawId"] == "core.comm");
    CHECK(j["model"] == "rat");
    CHECK(j["trials"] == 5);
    CHECK(j["seed"] == 42);
    CHECK(j["tolerance"] == "exact");
    CHECK(j["failures"].empty());
}
