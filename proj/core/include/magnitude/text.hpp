#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "magnitude/element.hpp"

namespace magnitude {

/// Nat "123"; rat "num/den" or "n"; real: a rational, "sqrt(q)" or "root(q,n)".
/// Throws ErrorKind::parse.
Element parse_element(ModelId model, std::string_view text);

/// "mid ± 2^-p" with the midpoint in decimal, rounded half up to the digits
/// that 2^-p resolves. Exact reals render as their rational form.
std::string format_real(const PosReal& x, unsigned p);

/// nat and rat in their text forms; real via format_real.
std::string format_element(const Element& e, unsigned p);

/// {"mid", "precision", "lo", "hi"} with exact rational endpoints at precision p.
nlohmann::json real_to_json(const PosReal& x, unsigned p);

/// {"model", "value"} for exact elements; reals add the interval fields.
nlohmann::json element_to_json(const Element& e, unsigned p);

} // namespace magnitude
