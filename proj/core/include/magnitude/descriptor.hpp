#pragma once

#include <optional>
#include <string_view>

#include "magnitude/rational.hpp"

namespace magnitude {

enum class ModelId { nat, rat, real };

std::string_view to_string(ModelId id) noexcept;
/// "nat" | "rat" | "real"; throws ErrorKind::parse otherwise.
ModelId parse_model(std::string_view text);

/// Classification of a shipped model. unit and smallest are given by value;
/// every shipped model embeds them as the number 1.
struct ModelDescriptor {
    ModelId id;
    bool discrete;
    bool symmetric;
    bool continuous_at_oracle;
    bool exact_order;
    std::optional<PosRat> unit;
    std::optional<PosRat> smallest;
};

ModelDescriptor descriptor(ModelId id);

} // namespace magnitude
