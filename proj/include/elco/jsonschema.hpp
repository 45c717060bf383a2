#pragma once

#include <string>

#include <json.hpp>

namespace elco::schema {

/// Structural validator for the subset of JSON Schema the shipped schemas
/// use: type, properties, required, items, enum. Returns true when the value
/// conforms; on failure `error` names the offending path.
bool validate(const nlohmann::json& value, const nlohmann::json& schema, std::string& error);

}  // namespace elco::schema
