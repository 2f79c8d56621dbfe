#include "magnitude/laws.hpp"

#include <array>
#include <map>

#include "law_support.hpp"
#include "magnitude/text.hpp"
#include "sampling.hpp"

namespace magnitude {
namespace detail {
namespace {

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

const PosReal& irrational_factor(std::size_t i) {
    static const std::array<PosReal, 2> factors = {relabel(real_root_of_rat(PosRat(Nat(2)), Nat(2)), "sqrt(2)"),
                                                   relabel(real_root_of_rat(PosRat(Nat(3)), Nat(2)), "sqrt(3)")};
    return factors.at(i);
}

Element draw_real(SampleSource& src) {
    PosRat q = src.rat(8);
    auto k = src.between(0, 2);
    if (k == 0) return real_from_rat(q);
    const PosReal& f = irrational_factor(k - 1);
    return relabel(real_mul(real_from_rat(q), f), q.to_string() + "*" + f.description());
}

PosRat draw_base(SampleSource& src) {
    static const std::array<PosRat, 3> grid = {rat_make(Nat(3), Nat(2)), PosRat(Nat(2)), rat_make(Nat(5), Nat(2))};
    if (src.coin()) return grid.at(src.between(0, 2));
    std::uint64_t den = src.between(1, 16);
    return rat_make(Nat(den + src.between(1, 3 * den)), Nat(den));
}

PosRat draw_exponent(SampleSource& src) {
    static const std::array<PosRat, 4> grid = {rat_make(Nat(1), Nat(3)), rat_make(Nat(1), Nat(2)), PosRat(Nat(1)),
                                               rat_make(Nat(7), Nat(4))};
    if (src.coin()) return grid.at(src.between(0, 3));
    return rat_make(Nat(src.between(1, 16)), Nat(src.between(1, 8)));
}

Element draw(char kind, SampleSource& src, ModelId model) {
    switch (kind) {
    case 'e':
        switch (model) {
        case ModelId::nat: return src.nat(32);
        case ModelId::rat: return src.rat(16);
        case ModelId::real: return draw_real(src);
        }
        break;
    case 'm': return Nat(src.between(1, 1024));
    case 's': return Nat(src.between(1, 16));
    case 'n': return src.nat(32);
    case 'q': return src.rat(16);
    case 'c': return Nat(src.between(1, 2));
    case 'x': return real_from_rat(draw_base(src));
    case 'y': return real_from_rat(draw_exponent(src));
    default: break;
    }
    fail(ErrorKind::invalid_argument, std::string("unknown input kind '") + kind + "'");
}

Verdict run_check(const LawDef& law, const Inputs& inputs, const LawContext& ctx) {
    try {
        return law.check(inputs, ctx);
    } catch (const MagnitudeError& e) {
        return Mismatch{std::string("error: ") + e.what(), "no error"};
    }
}

bool covers(const LawInfo& info, ModelId model) {
    for (ModelId m : info.models)
        if (m == model) return true;
    return false;
}

LawReport run_one(const LawDef& law, const SuiteOptions& options) {
    LawReport report;
    report.law_id = law.info.id;
    report.model = options.model;
    report.trials = options.trials;
    report.seed = options.seed;
    report.tolerance = options.tolerance;
    if (!report.tolerance.precision && options.model == ModelId::real) report.tolerance.precision = 40;

    LawContext ctx{options.model, report.tolerance.precision.value_or(40), options.fuel, &options.hooks, {}};
    ctx.policy.precision = ctx.precision;

    SampleSource src(options.seed ^ fnv1a(law.info.id));
    for (std::uint64_t t = 0; t < options.trials; ++t) {
        Inputs inputs;
        inputs.reserve(law.shape.size());
        for (char kind : law.shape) inputs.push_back(draw(kind, src, options.model));
        Verdict verdict = run_check(law, inputs, ctx);
        if (!verdict) continue;

        Inputs shrunk = shrink_all(inputs, [&](const Inputs& trial) { return run_check(law, trial, ctx).has_value(); });
        Verdict final_verdict = run_check(law, shrunk, ctx);
        LawFailure failure;
        for (const Element& e : shrunk) failure.inputs.push_back(e.to_string());
        failure.observed = final_verdict->observed;
        failure.expected = final_verdict->expected;
        report.failures.push_back(std::move(failure));
        break;
    }
    return report;
}

const LawDef& find_law(const std::string& id) {
    for (const LawDef& law : law_registry())
        if (law.info.id == id) return law;
    fail(ErrorKind::invalid_argument, "unknown law " + id);
}

} // namespace

Element plus(const Element& x, const Element& y) { return combine(x, y); }

Element times(const Element& n, const Element& x) { return multiple(n.as_nat(), x); }

OrderTag relation(const Element& x, const Element& y, const LawContext& ctx) {
    return certified_order(x, y, ctx.precision).value_or(OrderTag::equal);
}

Verdict expect_same(const Element& observed, const Element& expected, const LawContext& ctx) {
    auto ex = observed.exact_value();
    auto ey = expected.exact_value();
    if (ex && ey) {
        if (*ex == *ey) return std::nullopt;
    } else {
        Interval a = to_real(observed).approx(ctx.precision);
        Interval b = to_real(expected).approx(ctx.precision);
        if (a.intersects(b)) return std::nullopt;
        return Mismatch{a.to_string(), b.to_string()};
    }
    return Mismatch{observed.to_string(), expected.to_string()};
}

Verdict expect_tag(OrderTag observed, OrderTag expected, const std::string& what) {
    if (observed == expected) return std::nullopt;
    return Mismatch{what + " " + std::string(to_string(observed)), what + " " + std::string(to_string(expected))};
}

Verdict expect_true(bool ok, const std::string& what) {
    if (ok) return std::nullopt;
    return Mismatch{"not " + what, what};
}

RatioVerdict ratio_verdict(const Element& a, const Element& b, const Element& a2, const Element& b2,
                           const LawContext& ctx) {
    return ratio_compare(a, b, a2, b2, ctx.fuel).verdict;
}

Verdict expect_ratio_equal(const Element& a, const Element& b, const Element& a2, const Element& b2,
                           const LawContext& ctx) {
    RatioRel r = ratio_compare(a, b, a2, b2, ctx.fuel);
    const bool exact = a.exact_value() && b.exact_value() && a2.exact_value() && b2.exact_value();
    if (r.verdict == RatioVerdict::equal || (r.verdict == RatioVerdict::unknown && !exact)) return std::nullopt;
    std::string observed(to_string(r.verdict));
    if (r.witness) observed += " (witness " + r.witness->to_string() + ")";
    return Mismatch{observed, "equal"};
}

Verdict expect_ratio_greater(const Element& a, const Element& b, const Element& a2, const Element& b2,
                             const LawContext& ctx) {
    RatioRel r = ratio_compare(a, b, a2, b2, ctx.fuel);
    if (r.verdict != RatioVerdict::greater || !r.witness)
        return Mismatch{std::string(to_string(r.verdict)), "greater"};
    if (!ctx.hooks->verify_witness(*r.witness, a, b, a2, b2))
        return Mismatch{"greater with rejected witness " + r.witness->to_string(), "greater with a valid witness"};
    return std::nullopt;
}

} // namespace detail

std::string_view to_string(LawSet s) noexcept {
    switch (s) {
    case LawSet::core_axioms: return "core_axioms";
    case LawSet::euclid_v: return "euclid_v";
    case LawSet::ratio: return "ratio";
    case LawSet::embed: return "embed";
    case LawSet::hom: return "hom";
    case LawSet::power: return "power";
    case LawSet::models: return "models";
    }
    return "?";
}

std::vector<LawSet> all_law_sets() {
    return {LawSet::core_axioms, LawSet::euclid_v, LawSet::ratio, LawSet::embed,
            LawSet::hom,         LawSet::power,    LawSet::models};
}

LawSet parse_law_set(std::string_view text) {
    for (LawSet s : all_law_sets())
        if (to_string(s) == text) return s;
    fail(ErrorKind::parse, "unknown law set '" + std::string(text) + "'");
}

std::string Tolerance::to_string() const { return precision ? "2^-" + std::to_string(*precision) : "exact"; }

LawHooks LawHooks::standard() {
    LawHooks hooks;
    hooks.subtract = [](const Element& b, const Element& a) -> Element {
        if (b.model() == ModelId::real && !(a.exact_value() && b.exact_value()))
            return real_subtract(b.as_real(), a.as_real(), precision_cap(default_fuel));
        if (b.model() == ModelId::real)
            return real_from_rat(PosRat::from_mpq(b.exact_value()->value() - a.exact_value()->value()));
        return magnitude::subtract(b, a);
    };
    hooks.verify_witness = [](const Witness& w, const Element& a, const Element& b, const Element& a2,
                              const Element& b2) { return magnitude::verify_witness(w, a, b, a2, b2); };
    return hooks;
}

const std::vector<LawInfo>& list_laws() {
    static const std::vector<LawInfo> infos = [] {
        std::vector<LawInfo> out;
        for (const auto& law : detail::law_registry()) out.push_back(law.info);
        return out;
    }();
    return infos;
}

std::vector<LawReport> run_suite(const SuiteOptions& options) {
    if (options.trials < 1) fail(ErrorKind::invalid_argument, "trials must be at least 1");
    std::vector<LawReport> reports;
    for (const auto& law : detail::law_registry())
        if (law.info.set == options.set && detail::covers(law.info, options.model))
            reports.push_back(detail::run_one(law, options));
    return reports;
}

LawReport run_law(const std::string& law_id, const SuiteOptions& options) {
    if (options.trials < 1) fail(ErrorKind::invalid_argument, "trials must be at least 1");
    const auto& law = detail::find_law(law_id);
    if (!detail::covers(law.info, options.model))
        fail(ErrorKind::invalid_argument, law_id + " does not apply to " + std::string(to_string(options.model)));
    return detail::run_one(law, options);
}

nlohmann::json to_json(const LawReport& report) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"inputs", f.inputs}, {"observed", f.observed}, {"expected", f.expected}});
    return {{"lawId", report.law_id},
            {"model", std::string(to_string(report.model))},
            {"trials", report.trials},
            {"seed", report.seed},
            {"tolerance", report.tolerance.to_string()},
            {"failures", failures}};
}

} // namespace magnitude
