#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "magnitude/element.hpp"

namespace magnitude {

/// The pair (m, n) certifying a:b > a':b' via ma > nb and ma' <= nb'.
struct Witness {
    Nat m;
    Nat n;

    /// "m=<nat> n=<nat>"
    std::string to_string() const;
    friend bool operator==(const Witness&, const Witness&) = default;
};

/// A pair a:b of elements of one model.
class Ratio {
public:
    Ratio(Element antecedent, Element consequent);

    const Element& antecedent() const noexcept { return antecedent_; }
    const Element& consequent() const noexcept { return consequent_; }
    ModelId model() const noexcept { return antecedent_.model(); }

private:
    Element antecedent_;
    Element consequent_;
};

enum class RatioVerdict { equal, greater, less, unknown };

std::string_view to_string(RatioVerdict v) noexcept;

/// Verdict of ratio_compare. Greater/Less carry a witness; for Less the
/// witness certifies the swapped comparison a2:b2 > a:b. Unknown means the
/// ratios are equal or closer than the fuel could resolve.
struct RatioRel {
    RatioVerdict verdict = RatioVerdict::unknown;
    std::optional<Witness> witness;
    std::uint64_t fuel_spent = 0;
};

/// Highest precision the engine escalates to for a given fuel.
unsigned precision_cap(std::uint64_t fuel) noexcept;

inline constexpr std::uint64_t default_fuel = 64;

/// Least (m, n) with ma > b and nb > a. On the real model "least" means the
/// least multiple whose excess is certifiable up to max_p.
std::pair<Nat, Nat> have_ratio_witness(const Element& a, const Element& b,
                                       unsigned max_p = precision_cap(default_fuel));

/// The reduced fraction a/b of a nat or rat ratio. Real ratios raise inexact_model.
PosRat ratio_value_exact(const Ratio& r);

/// Compares a:b with a2:b2 (each pair from its own model). Exact operands are
/// decided outright; otherwise the Stern-Brocot tree of candidate separators
/// n/m is walked, spending one unit of fuel per probe.
RatioRel ratio_compare(const Element& a, const Element& b, const Element& a2, const Element& b2,
                       std::uint64_t fuel = default_fuel);
RatioRel ratio_compare(const Ratio& first, const Ratio& second, std::uint64_t fuel = default_fuel);

/// True iff ma > nb (exact or certified) and ma2 <= nb2 (exact, certified
/// less, or not certifiably greater up to max_p).
bool verify_witness(const Witness& w, const Element& a, const Element& b, const Element& a2,
                    const Element& b2, unsigned max_p = precision_cap(default_fuel));

/// Given ja > kb and ja2 = kb2 exactly, returns (m, n) with ma > nb and
/// ma2 < nb2 strictly: m = pj - 1, n = pk for the least p with p(ja - kb) > a.
Witness upgrade_boundary_witness(const Witness& boundary, const Element& a, const Element& b,
                                 const Element& a2, const Element& b2,
                                 unsigned max_p = precision_cap(default_fuel));

} // namespace magnitude
