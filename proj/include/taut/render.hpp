#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "taut/expr.hpp"

namespace taut {

enum class Format { Text, Latex, Json };

Format parse_format(std::string_view name);

std::string render_generator(const Generator& g, const ModuliSpec& spec, Format format);

/// Deterministic rendering. `degree` overrides the "degree" field of the JSON
/// form (defaults to the truncation order).
std::string render(const TautExpr& e, Format format, std::optional<int> degree = std::nullopt);

nlohmann::ordered_json to_json(const TautExpr& e, std::optional<int> degree = std::nullopt);
TautExpr from_json(const nlohmann::ordered_json& doc);

}  // namespace taut
