#pragma once

// Minimal structural validator for the subset of JSON Schema used by
// docs/report-schema.json: type, required, properties, items, enum,
// additionalProperties (boolean form).

#include <string>

#include "cdcw/json_io.hpp"

namespace cdcw::test_schema {

inline bool type_matches(const Json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  return false;
}

inline bool validate(const Json& value, const Json& schema, std::string& err,
                     const std::string& where = "$") {
  if (schema.contains("enum")) {
    for (const Json& option : schema.at("enum"))
      if (value == option) return true;
    err = where + ": value not in enum";
    return false;
  }
  if (schema.contains("type") &&
      !type_matches(value, schema.at("type").get<std::string>())) {
    err = where + ": expected type " + schema.at("type").get<std::string>();
    return false;
  }
  if (schema.contains("required")) {
    for (const Json& key : schema.at("required"))
      if (!value.contains(key.get<std::string>())) {
        err = where + ": missing required key " + key.get<std::string>();
        return false;
      }
  }
  if (schema.contains("properties") && value.is_object()) {
    const Json& props = schema.at("properties");
    for (auto it = value.begin(); it != value.end(); ++it) {
      if (props.contains(it.key())) {
        if (!validate(it.value(), props.at(it.key()), err, where + "." + it.key()))
          return false;
      } else if (schema.contains("additionalProperties") &&
                 schema.at("additionalProperties").is_boolean() &&
                 !schema.at("additionalProperties").get<bool>()) {
        err = where + ": unexpected key " + it.key();
        return false;
      }
    }
  }
  if (schema.contains("items") && value.is_array()) {
    int i = 0;
    for (const Json& item : value)
      if (!validate(item, schema.at("items"), err,
                    where + "[" + std::to_string(i++) + "]"))
        return false;
  }
  return true;
}

inline Json load_schemas(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail_input("cannot open schema file: " + path);
  Json j;
  f >> j;
  return j.at("schemas");
}

}  // namespace cdcw::test_schema
