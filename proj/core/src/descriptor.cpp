#include "magnitude/descriptor.hpp"

#include <string>

#include "magnitude/error.hpp"

namespace magnitude {

std::string_view to_string(ModelId id) noexcept {
    switch (id) {
    case ModelId::nat: return "nat";
    case ModelId::rat: return "rat";
    case ModelId::real: return "real";
    }
    return "?";
}

ModelId parse_model(std::string_view text) {
    if (text == "nat") return ModelId::nat;
    if (text == "rat") return ModelId::rat;
    if (text == "real") return ModelId::real;
    fail(ErrorKind::parse, "unknown model '" + std::string(text) + "'");
}

ModelDescriptor descriptor(ModelId id) {
    switch (id) {
    case ModelId::nat:
        return {id, true, false, false, true, PosRat{}, PosRat{}};
    case ModelId::rat:
        return {id, false, true, false, true, PosRat{}, std::nullopt};
    case ModelId::real:
        return {id, false, true, true, false, PosRat{}, std::nullopt};
    }
    fail(ErrorKind::invalid_argument, "unknown model id");
}

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::parse: return "parse error";
    case ErrorKind::not_greater: return "not greater";
    case ErrorKind::discrete_model: return "discrete model";
    case ErrorKind::model_mismatch: return "model mismatch";
    case ErrorKind::inexact_model: return "inexact model";
    case ErrorKind::oracle_failure: return "oracle failure";
    case ErrorKind::guard_exceeded: return "guard exceeded";
    case ErrorKind::not_symmetric: return "model not symmetric";
    case ErrorKind::not_above_one: return "not above one";
    case ErrorKind::unsupported_codomain: return "unsupported codomain";
    case ErrorKind::unsupported_domain: return "unsupported domain";
    case ErrorKind::signature_mismatch: return "signature mismatch";
    case ErrorKind::undecided: return "undecided";
    case ErrorKind::no_unit: return "no unit";
    case ErrorKind::invalid_argument: return "invalid argument";
    }
    return "unknown error";
}

} // namespace magnitude
