#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "magnitude/magnitude.hpp"

namespace magnitude::cli {
namespace {

struct Config {
    std::string model = "rat";
    std::string model2;
    unsigned precision = 30;
    std::uint64_t fuel = default_fuel;
    std::uint64_t seed = 42;
    std::uint64_t trials = 1000;
    std::string format = "text";
};

struct Result {
    std::string text;
    nlohmann::json json;
    int code = ok;
};

class Commands {
public:
    explicit Commands(const Config& cfg) : cfg_(cfg) {}

    ModelId model() const { return parse_model(cfg_.model); }
    ModelId model2() const { return cfg_.model2.empty() ? model() : parse_model(cfg_.model2); }
    Element element(ModelId m, const std::string& text) const { return parse_element(m, text); }

    Result ratio_cmp(const std::vector<std::string>& args) const {
        std::vector<Element> xs;
        if (args.size() == 4) {
            xs = {element(model(), args[0]), element(model(), args[1]), element(model2(), args[2]),
                  element(model2(), args[3])};
        } else if (args.size() == 2) {
            auto [a, b] = split_ratio(model(), args[0]);
            auto [a2, b2] = split_ratio(model2(), args[1]);
            xs = {a, b, a2, b2};
        } else {
            throw CLI::ValidationError("ratio cmp", "expects A B A2 B2 or two ratios A:B A2:B2");
        }
        const RatioRel r = ratio_compare(xs[0], xs[1], xs[2], xs[3], cfg_.fuel);
        Result out;
        out.text = std::string(to_string(r.verdict));
        out.json = {{"verdict", std::string(to_string(r.verdict))}, {"fuel_spent", r.fuel_spent}};
        if (r.witness) {
            out.text += " (witness " + r.witness->to_string() + ")";
            out.json["witness"] = {{"m", r.witness->m.to_string()}, {"n", r.witness->n.to_string()}};
        }
        if (r.verdict == RatioVerdict::unknown) {
            out.text += " (no separating multiples within fuel " + std::to_string(cfg_.fuel) + ")";
            out.code = undecided;
        }
        return out;
    }

    Result multiple_cmd(const std::string& n, const std::string& a) const {
        return element_result(multiple(nat_make(n), element(model(), a)));
    }

    Result fourth(const std::string& a, const std::string& b, const std::string& a_prime) const {
        const ModelId codomain = cfg_.model2.empty() ? ModelId::real : model2();
        const Element a2 = element(codomain, a_prime);
        const PosReal r = fourth_proportional(element(model(), a), element(model(), b), to_real(a2));
        if (codomain == ModelId::real) return element_result(r);
        if (!r.exact()) fail(ErrorKind::unsupported_codomain, "the fourth proportional is not exact");
        return element_result(element_from_value(codomain, *r.exact()));
    }

    Result mul(const std::string& a, const std::string& b) const {
        return element_result(product(element(model(), a), element(model(), b), policy()));
    }

    Result quot(const std::string& b, const std::string& a) const {
        return element_result(quotient(element(model(), b), element(model(), a), policy()));
    }

    Result power(const std::string& x, const std::string& y) const {
        const MulReal base = into_mul(parse_element(ModelId::real, x).as_real());
        const PosReal exponent = parse_element(ModelId::real, y).as_real();
        return element_result(pow(base, exponent).value());
    }

    Result embed_check(const std::string& arg) const {
        std::string text = arg;
        if (std::ifstream file{arg}; file) {
            std::stringstream ss;
            ss << file.rdbuf();
            text = ss.str();
        }
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            fail(ErrorKind::parse, std::string("embedding is not valid JSON: ") + e.what());
        }
        const EmbeddingRepr phi = embedding_from_json(j);
        const HomCheckReport report = check_homomorphism(phi, cfg_.trials, cfg_.seed, policy());
        Result out;
        out.json = {{"embedding", to_json(phi)}, {"samples", report.samples}, {"seed", report.seed},
                    {"passed", report.passed()}};
        if (report.passed()) {
            out.text = "passed (" + std::to_string(report.samples) + " samples, seed " + std::to_string(report.seed) +
                       ")";
            return out;
        }
        const HomCheckFailure& f = *report.failure;
        out.json["failure"] = {{"property", f.property}, {"a", f.a.to_string()}, {"b", f.b.to_string()},
                               {"observed", f.observed}, {"expected", f.expected}};
        out.text = "failed " + f.property + " at a=" + f.a.to_string() + " b=" + f.b.to_string() + ": observed " +
                   f.observed + ", expected " + f.expected;
        out.code = domain_error;
        return out;
    }

    Result laws_run(const std::string& set) const {
        SuiteOptions options;
        options.model = model();
        options.set = parse_law_set(set);
        options.trials = cfg_.trials;
        options.seed = cfg_.seed;
        if (options.model == ModelId::real) options.tolerance.precision = cfg_.precision;
        Result out;
        out.json = nlohmann::json::array();
        for (const LawReport& r : run_suite(options)) {
            out.json.push_back(to_json(r));
            if (!out.text.empty()) out.text += "\n";
            if (r.passed()) {
                out.text += "PASS " + r.law_id;
                continue;
            }
            const LawFailure& f = r.failures.front();
            std::string inputs;
            for (const auto& s : f.inputs) inputs += (inputs.empty() ? "" : ", ") + s;
            out.text += "FAIL " + r.law_id + " inputs [" + inputs + "] observed " + f.observed + ", expected " +
                        f.expected;
            out.code = domain_error;
        }
        return out;
    }

    Result laws_list() const {
        Result out;
        out.json = nlohmann::json::array();
        for (const LawInfo& info : list_laws()) {
            nlohmann::json models = nlohmann::json::array();
            for (ModelId m : info.models) models.push_back(std::string(to_string(m)));
            out.json.push_back(
                {{"id", info.id}, {"anchor", info.anchor}, {"set", std::string(to_string(info.set))}, {"models", models}});
            if (!out.text.empty()) out.text += "\n";
            out.text += info.id + "\t" + info.anchor;
        }
        return out;
    }

private:
    ApproxPolicy policy() const {
        ApproxPolicy p;
        p.precision = cfg_.precision;
        return p;
    }

    Result element_result(const Element& e) const {
        return {format_element(e, cfg_.precision), element_to_json(e, cfg_.precision), ok};
    }

    std::pair<Element, Element> split_ratio(ModelId m, const std::string& text) const {
        auto pos = text.find(':');
        if (pos == std::string::npos) pos = text.find('/');
        if (pos == std::string::npos) throw CLI::ValidationError("ratio", "expected A:B or A/B, got " + text);
        return {element(m, text.substr(0, pos)), element(m, text.substr(pos + 1))};
    }

    const Config& cfg_;
};

void emit(const Result& r, const Config& cfg, std::ostream& out) {
    if (cfg.format == "json")
        out << r.json.dump() << "\n";
    else
        out << r.text << "\n";
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::parse: return usage;
    case ErrorKind::undecided: return undecided;
    default: return domain_error;
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Exact magnitude arithmetic: ratios, embeddings, products and powers", "magnitude"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--model", cfg.model, "nat, rat or real")->check(CLI::IsMember({"nat", "rat", "real"}));
    app.add_option("--model2", cfg.model2, "model of the second pair or the fourth-proportional codomain")
        ->check(CLI::IsMember({"nat", "rat", "real"}));
    app.add_option("-p,--precision", cfg.precision, "output precision in bits")->envname("MAGNITUDE_PRECISION");
    app.add_option("--fuel", cfg.fuel, "ratio search probes")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--trials", cfg.trials, "trials per law or samples per check")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::optional<Result> result;
    Commands cmd(cfg);
    std::vector<std::string> pos;
    std::string s1, s2, s3;

    auto* ratio = app.add_subcommand("ratio", "ratio comparison");
    ratio->require_subcommand(1);
    auto* cmp = ratio->add_subcommand("cmp", "compare A:B with A2:B2");
    cmp->add_option("elements", pos, "A B A2 B2, or two ratios A:B A2:B2")->required();
    cmp->callback([&] { result = cmd.ratio_cmp(pos); });

    auto* mult = app.add_subcommand("multiple", "n-fold sum na");
    mult->add_option("n", s1)->required();
    mult->add_option("a", s2)->required();
    mult->callback([&] { result = cmd.multiple_cmd(s1, s2); });

    auto* fourth = app.add_subcommand("fourth", "fourth proportional b' with a:b = a':b'");
    fourth->add_option("a", s1)->required();
    fourth->add_option("b", s2)->required();
    fourth->add_option("aprime", s3)->required();
    fourth->callback([&] { result = cmd.fourth(s1, s2, s3); });

    auto* mul = app.add_subcommand("mul", "product ab");
    mul->add_option("a", s1)->required();
    mul->add_option("b", s2)->required();
    mul->callback([&] { result = cmd.mul(s1, s2); });

    auto* quot = app.add_subcommand("quot", "quotient b/a");
    quot->add_option("b", s1)->required();
    quot->add_option("a", s2)->required();
    quot->callback([&] { result = cmd.quot(s1, s2); });

    auto* pw = app.add_subcommand("pow", "x^y for x > 1");
    pw->add_option("x", s1)->required();
    pw->add_option("y", s2)->required();
    pw->callback([&] { result = cmd.power(s1, s2); });

    auto* embed = app.add_subcommand("embed-check", "test an embedding for additivity and order");
    embed->add_option("embedding", s1, "JSON text or a file holding it")->required();
    embed->callback([&] { result = cmd.embed_check(s1); });

    auto* laws = app.add_subcommand("laws", "law suites");
    laws->require_subcommand(1);
    auto* run_cmd = laws->add_subcommand("run", "run a law set");
    run_cmd->add_option("set", s1)->required();
    run_cmd->callback([&] { result = cmd.laws_run(s1); });
    auto* list = laws->add_subcommand("list", "list registered laws");
    list->callback([&] { result = cmd.laws_list(); });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const MagnitudeError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
    if (!result) {
        err << "usage error: no command given\n";
        return usage;
    }
    emit(*result, cfg, out);
    return result->code;
}

} // namespace magnitude::cli
