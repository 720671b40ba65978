#pragma once

#include "nabla/fields.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace nabla {

// Field documents:
//   {"kind":"scalar","terms":[{"c":"3/2","e":[2,0,1]}, ...]}
//   {"kind":"vector","components":[[...],[...],[...]]}
// A missing or empty terms array is the zero field. Duplicate exponent
// triples are rejected.

FieldValue field_from_json(const nlohmann::json& doc);
FieldValue parse_field(std::string_view text);
FieldValue read_field_file(const std::filesystem::path& path);

/// Terms are emitted in ascending exponent order, so output is canonical.
nlohmann::ordered_json field_to_json(const FieldValue& fv);
std::string dump_field(const FieldValue& fv);

/// {"kind":"scalar","value":"6"} or {"kind":"vector","value":["1","0","0"]}.
nlohmann::ordered_json point_value_to_json(const PointValue<Rational>& value);

/// "6" or "(1, 0, 0)".
std::string to_string(const PointValue<Rational>& value);

/// Parses "a,b,c" with rational entries.
std::array<Rational, 3> parse_point(std::string_view text);

}  // namespace nabla
