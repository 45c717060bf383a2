#include "elco/jsonschema.hpp"

namespace elco::schema {

namespace {

bool type_matches(const nlohmann::json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  return false;
}

bool validate_at(const nlohmann::json& value, const nlohmann::json& schema,
                 const std::string& path, std::string& error) {
  if (schema.contains("type")) {
    const auto& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(value, t.get<std::string>());
    } else if (t.is_array()) {
      for (const auto& alt : t)
        if (type_matches(value, alt.get<std::string>())) ok = true;
    }
    if (!ok) {
      error = path + ": type mismatch";
      return false;
    }
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& alt : schema["enum"])
      if (alt == value) ok = true;
    if (!ok) {
      error = path + ": not in enum";
      return false;
    }
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!value.contains(key.get<std::string>())) {
          error = path + ": missing required key " + key.get<std::string>();
          return false;
        }
    if (schema.contains("properties"))
      for (const auto& [key, sub] : schema["properties"].items())
        if (value.contains(key) &&
            !validate_at(value[key], sub, path + "/" + key, error))
          return false;
  }
  if (value.is_array() && schema.contains("items")) {
    size_t i = 0;
    for (const auto& item : value) {
      if (!validate_at(item, schema["items"], path + "/" + std::to_string(i), error))
        return false;
      ++i;
    }
  }
  return true;
}

}  // namespace

bool validate(const nlohmann::json& value, const nlohmann::json& schema, std::string& error) {
  error.clear();
  return validate_at(value, schema, "$", error);
}

}  // namespace elco::schema
