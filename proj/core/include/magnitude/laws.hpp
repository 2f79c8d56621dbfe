#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "magnitude/power.hpp"
#include "magnitude/ratio.hpp"

namespace magnitude {

enum class LawSet { core_axioms, euclid_v, ratio, embed, hom, power, models };

std::string_view to_string(LawSet s) noexcept;
/// Accepts the names above and "all" is not a set; throws ErrorKind::parse.
LawSet parse_law_set(std::string_view text);
std::vector<LawSet> all_law_sets();

/// Precision for real-model checks; nullopt means exact equality.
struct Tolerance {
    std::optional<unsigned> precision;

    std::string to_string() const;
};

struct LawFailure {
    std::vector<std::string> inputs;
    std::string observed;
    std::string expected;
};

struct LawReport {
    std::string law_id;
    ModelId model = ModelId::rat;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    Tolerance tolerance;
    std::vector<LawFailure> failures;

    bool passed() const noexcept { return failures.empty(); }
};

struct LawInfo {
    std::string id;
    std::string anchor;
    LawSet set;
    std::vector<ModelId> models;
};

/// The registry, one entry per law, in suite order.
const std::vector<LawInfo>& list_laws();

/// Replaceable primitives, so mutation tests can check the suite is not vacuous.
struct LawHooks {
    /// b - a
    std::function<Element(const Element& b, const Element& a)> subtract;
    std::function<bool(const Witness&, const Element&, const Element&, const Element&, const Element&)>
        verify_witness;

    static LawHooks standard();
};

struct SuiteOptions {
    ModelId model = ModelId::rat;
    LawSet set = LawSet::core_axioms;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 42;
    /// Defaults to exact on nat and rat and 40 bits on real.
    Tolerance tolerance;
    LawHooks hooks = LawHooks::standard();
    std::uint64_t fuel = 512;
};

/// Runs every law of the set that applies to the model. Deterministic in the
/// options; a failing law reports its first failing trial, shrunk.
std::vector<LawReport> run_suite(const SuiteOptions& options);

/// Runs one law by id; throws invalid_argument on an unknown id or a model the
/// law does not cover.
LawReport run_law(const std::string& law_id, const SuiteOptions& options);

nlohmann::json to_json(const LawReport& report);

} // namespace magnitude
