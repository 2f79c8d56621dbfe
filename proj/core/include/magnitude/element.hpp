#pragma once

#include <optional>
#include <string>
#include <variant>

#include "magnitude/core.hpp"

namespace magnitude {

/// An element of one of the shipped models, tagged by its model. Used where
/// the model is chosen at run time (ratios across models, embeddings, CLI).
class Element {
public:
    using Value = std::variant<Nat, PosRat, PosReal>;

    Element(Nat v) : value_(std::move(v)) {}       // NOLINT(google-explicit-constructor)
    Element(PosRat v) : value_(std::move(v)) {}    // NOLINT(google-explicit-constructor)
    Element(PosReal v) : value_(std::move(v)) {}   // NOLINT(google-explicit-constructor)

    ModelId model() const noexcept { return static_cast<ModelId>(value_.index()); }
    const Value& value() const noexcept { return value_; }

    const Nat& as_nat() const;
    const PosRat& as_rat() const;
    const PosReal& as_real() const;

    /// The exact numeric value, when known (always for nat and rat).
    std::optional<PosRat> exact_value() const;

    std::string to_string() const;

private:
    Value value_;
};

/// The element of `model` with numeric value q. Nat requires an integer.
Element element_from_value(ModelId model, const PosRat& q);

/// Any element viewed in the real model.
PosReal to_real(const Element& e);

void require_same_model(const Element& a, const Element& b);

Element combine(const Element& a, const Element& b);

/// Exact-order models only; real elements raise inexact_model.
Ordering3<Element> compare(const Element& a, const Element& b);

Element shrink_below(const Element& a, const Nat& n);

} // namespace magnitude
