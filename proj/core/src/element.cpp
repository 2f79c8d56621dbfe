#include "magnitude/element.hpp"

#include <string>

namespace magnitude {
namespace {

[[noreturn]] void wrong_model(ModelId want, ModelId got) {
    fail(ErrorKind::model_mismatch,
         "expected a " + std::string(to_string(want)) + " element, got " + std::string(to_string(got)));
}

template <class T>
Ordering3<Element> lift(const Ordering3<T>& o) {
    switch (o.tag()) {
    case OrderTag::less: return Ordering3<Element>::less_by(Element(o.difference()));
    case OrderTag::greater: return Ordering3<Element>::greater_by(Element(o.difference()));
    case OrderTag::equal: break;
    }
    return Ordering3<Element>::equal();
}

} // namespace

const Nat& Element::as_nat() const {
    if (auto* v = std::get_if<Nat>(&value_)) return *v;
    wrong_model(ModelId::nat, model());
}

const PosRat& Element::as_rat() const {
    if (auto* v = std::get_if<PosRat>(&value_)) return *v;
    wrong_model(ModelId::rat, model());
}

const PosReal& Element::as_real() const {
    if (auto* v = std::get_if<PosReal>(&value_)) return *v;
    wrong_model(ModelId::real, model());
}

std::optional<PosRat> Element::exact_value() const {
    switch (model()) {
    case ModelId::nat: return PosRat(as_nat());
    case ModelId::rat: return as_rat();
    case ModelId::real: return as_real().exact();
    }
    return std::nullopt;
}

std::string Element::to_string() const {
    switch (model()) {
    case ModelId::nat: return as_nat().to_string();
    case ModelId::rat: return as_rat().to_string();
    case ModelId::real: return as_real().description();
    }
    return "?";
}

Element element_from_value(ModelId model, const PosRat& q) {
    switch (model) {
    case ModelId::nat:
        if (q.den() != Nat{}) fail(ErrorKind::invalid_argument, q.to_string() + " is not a natural number");
        return q.num();
    case ModelId::rat: return q;
    case ModelId::real: return real_from_rat(q);
    }
    fail(ErrorKind::invalid_argument, "unknown model");
}

PosReal to_real(const Element& e) {
    if (e.model() == ModelId::real) return e.as_real();
    return real_from_rat(*e.exact_value());
}

void require_same_model(const Element& a, const Element& b) {
    if (a.model() != b.model()) wrong_model(a.model(), b.model());
}

Element combine(const Element& a, const Element& b) {
    require_same_model(a, b);
    switch (a.model()) {
    case ModelId::nat: return combine(a.as_nat(), b.as_nat());
    case ModelId::rat: return combine(a.as_rat(), b.as_rat());
    case ModelId::real: return combine(a.as_real(), b.as_real());
    }
    fail(ErrorKind::invalid_argument, "unknown model");
}

Ordering3<Element> compare(const Element& a, const Element& b) {
    require_same_model(a, b);
    switch (a.model()) {
    case ModelId::nat: return lift(compare(a.as_nat(), b.as_nat()));
    case ModelId::rat: return lift(compare(a.as_rat(), b.as_rat()));
    case ModelId::real: break;
    }
    fail(ErrorKind::inexact_model, "real elements have no exact comparison; use real_compare");
}

Element shrink_below(const Element& a, const Nat& n) {
    switch (a.model()) {
    case ModelId::nat: return shrink_below(a.as_nat(), n);
    case ModelId::rat: return shrink_below(a.as_rat(), n);
    case ModelId::real: return shrink_below(a.as_real(), n);
    }
    fail(ErrorKind::invalid_argument, "unknown model");
}

} // namespace magnitude
