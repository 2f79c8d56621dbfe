#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "magnitude/laws.hpp"

namespace magnitude::detail {

struct LawContext {
    ModelId model;
    unsigned precision; // real-model tolerance
    std::uint64_t fuel;
    const LawHooks* hooks;
    ApproxPolicy policy;
};

struct Mismatch {
    std::string observed;
    std::string expected;
};

using Verdict = std::optional<Mismatch>;
using Inputs = std::vector<Element>;
using LawCheck = std::function<Verdict(const Inputs&, const LawContext&)>;

/// Input shape, one character per drawn value:
///   e  element of the model under test
///   m  multiplier 1 .. 2^10 (nat)
///   s  small multiplier 1 .. 16 (nat)
///   n  natural number 1 .. 2^32 (nat)
///   q  rational 2^-16 .. 2^16 (rat)
///   c  coin: nat 1 or 2
///   x  power base: real rational in (1, 4]
///   y  exponent: real rational
struct LawDef {
    LawInfo info;
    std::string shape;
    LawCheck check;
};

const std::vector<LawDef>& law_registry();

// Helpers shared by the law definitions.

Element plus(const Element& x, const Element& y);
Element times(const Element& n, const Element& x);
OrderTag relation(const Element& x, const Element& y, const LawContext& ctx);
Verdict expect_same(const Element& observed, const Element& expected, const LawContext& ctx);
Verdict expect_tag(OrderTag observed, OrderTag expected, const std::string& what);
Verdict expect_true(bool ok, const std::string& what);
Verdict expect_ratio_equal(const Element& a, const Element& b, const Element& a2, const Element& b2,
                           const LawContext& ctx);
/// Greater verdict whose witness passes the hooked verification.
Verdict expect_ratio_greater(const Element& a, const Element& b, const Element& a2, const Element& b2,
                             const LawContext& ctx);
RatioVerdict ratio_verdict(const Element& a, const Element& b, const Element& a2, const Element& b2,
                           const LawContext& ctx);


} // namespace magnitude::detail
