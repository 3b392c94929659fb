#pragma once

// Restricted JSON schemas, validation, and the leaf-path node sets used to
// score JSON predictions.

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>
#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include "readerkit/detail/text.hpp"

namespace readerkit {

using Json = nlohmann::json;

enum class JsonType : std::uint8_t { Object, Array, String, Number, Integer, Boolean };

inline std::string_view to_string(JsonType t) noexcept {
  switch (t) {
    case JsonType::Object: return "object";
    case JsonType::Array: return "array";
    case JsonType::String: return "string";
    case JsonType::Number: return "number";
    case JsonType::Integer: return "integer";
    case JsonType::Boolean: return "boolean";
  }
  return "?";
}

inline std::optional<JsonType> parse_json_type(std::string_view s) noexcept {
  if (s == "object") return JsonType::Object;
  if (s == "array") return JsonType::Array;
  if (s == "string") return JsonType::String;
  if (s == "number") return JsonType::Number;
  if (s == "integer") return JsonType::Integer;
  if (s == "boolean") return JsonType::Boolean;
  return std::nullopt;
}

class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SchemaProperty;

struct JsonSchemaSpec {
  JsonType type = JsonType::Object;
  std::vector<SchemaProperty> properties;  // sorted by name
  std::vector<std::string> required;
  std::shared_ptr<const JsonSchemaSpec> items;
  std::optional<std::vector<Json>> enum_values;

  const JsonSchemaSpec* property(std::string_view name) const noexcept;

  // Accepts {"type", "properties", "required", "items", "enum"}. A node
  // without "type" is an object. Throws SchemaError on invariant breaks.
  static JsonSchemaSpec from_json(const Json& j);
  Json to_json() const;
};

struct SchemaProperty {
  std::string name;
  JsonSchemaSpec schema;
};

// Whether `v` has the JSON type `t`. Integral floats count as integers.
inline bool json_has_type(const Json& v, JsonType t) noexcept {
  switch (t) {
    case JsonType::Object: return v.is_object();
    case JsonType::Array: return v.is_array();
    case JsonType::String: return v.is_string();
    case JsonType::Number: return v.is_number();
    case JsonType::Integer:
      if (v.is_number_integer()) return true;
      if (v.is_number_float()) {
        const double d = v.get<double>();
        return std::isfinite(d) && std::floor(d) == d;
      }
      return false;
    case JsonType::Boolean: return v.is_boolean();
  }
  return false;
}

inline const JsonSchemaSpec* JsonSchemaSpec::property(std::string_view name) const noexcept {
  for (const auto& p : properties)
    if (p.name == name) return &p.schema;
  return nullptr;
}

inline JsonSchemaSpec JsonSchemaSpec::from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("schema node must be a JSON object");
  JsonSchemaSpec s;
  if (auto it = j.find("type"); it != j.end()) {
    if (!it->is_string()) throw SchemaError("schema 'type' must be a string");
    auto t = parse_json_type(it->get<std::string>());
    if (!t) throw SchemaError("unsupported schema type '" + it->get<std::string>() + "'");
    s.type = *t;
  }
  if (auto it = j.find("properties"); it != j.end()) {
    if (s.type != JsonType::Object) throw SchemaError("'properties' only allowed on object schemas");
    if (!it->is_object()) throw SchemaError("'properties' must be an object");
    for (const auto& [name, sub] : it->items()) s.properties.push_back({name, from_json(sub)});
  }
  if (auto it = j.find("required"); it != j.end()) {
    if (s.type != JsonType::Object) throw SchemaError("'required' only allowed on object schemas");
    if (!it->is_array()) throw SchemaError("'required' must be an array");
    for (const auto& r : *it) {
      if (!r.is_string()) throw SchemaError("'required' entries must be strings");
      const auto name = r.get<std::string>();
      if (s.property(name) == nullptr) throw SchemaError("required field '" + name + "' is not a declared property");
      s.required.push_back(name);
    }
  }
  if (auto it = j.find("items"); it != j.end()) {
    if (s.type != JsonType::Array) throw SchemaError("'items' only allowed on array schemas");
    s.items = std::make_shared<const JsonSchemaSpec>(from_json(*it));
  } else if (s.type == JsonType::Array) {
    throw SchemaError("array schema requires 'items'");
  }
  if (auto it = j.find("enum"); it != j.end()) {
    if (!it->is_array() || it->empty()) throw SchemaError("'enum' must be a non-empty array");
    for (const auto& v : *it)
      if (!json_has_type(v, s.type)) throw SchemaError("enum value " + v.dump() + " does not match type " + std::string(to_string(s.type)));
    s.enum_values = std::vector<Json>(it->begin(), it->end());
  }
  return s;
}

inline Json JsonSchemaSpec::to_json() const {
  Json j = {{"type", to_string(type)}};
  if (type == JsonType::Object) {
    Json props = Json::object();
    for (const auto& p : properties) props[p.name] = p.schema.to_json();
    j["properties"] = std::move(props);
    if (!required.empty()) j["required"] = required;
  }
  if (items) j["items"] = items->to_json();
  if (enum_values) j["enum"] = *enum_values;
  return j;
}

// ---------------------------------------------------------------------------
// Paths

// One path segment for an object key: '~' -> "~0", '/' -> "~1"; keys made
// only of digits get a "~2" prefix and the empty key is "~3", so keys never
// collide with array indices or the root path.
inline std::string escape_path_key(std::string_view key) {
  if (key.empty()) return "~3";
  bool digits = true;
  std::string out;
  out.reserve(key.size() + 2);
  for (char c : key) {
    digits = digits && detail::is_ascii_digit(c);
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out.push_back(c);
  }
  if (digits) out.insert(0, "~2");
  return out;
}

inline std::string join_path(std::string_view parent, std::string_view segment) {
  if (parent.empty()) return std::string(segment);
  std::string out(parent);
  out.push_back('/');
  out.append(segment);
  return out;
}

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind : std::uint8_t { TypeMismatch, MissingRequired, EnumMismatch };

inline std::string_view to_string(ViolationKind k) noexcept {
  switch (k) {
    case ViolationKind::TypeMismatch: return "type-mismatch";
    case ViolationKind::MissingRequired: return "missing-required";
    case ViolationKind::EnumMismatch: return "enum-mismatch";
  }
  return "?";
}

struct Violation {
  std::string path;
  ViolationKind kind;
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

namespace schema_detail {

inline void validate_into(const Json& v, const JsonSchemaSpec& s, const std::string& path, ValidationReport& r) {
  auto fail = [&](std::string p, ViolationKind k, std::string d) {
    r.ok = false;
    r.violations.push_back({std::move(p), k, std::move(d)});
  };
  if (!json_has_type(v, s.type)) {
    fail(path, ViolationKind::TypeMismatch, "expected " + std::string(to_string(s.type)) + ", got " + v.type_name());
    return;
  }
  if (s.enum_values) {
    bool found = false;
    for (const auto& e : *s.enum_values) found = found || e == v;
    if (!found) fail(path, ViolationKind::EnumMismatch, v.dump() + " not in enum");
  }
  if (s.type == JsonType::Object) {
    for (const auto& name : s.required)
      if (!v.contains(name)) fail(join_path(path, escape_path_key(name)), ViolationKind::MissingRequired, "required field absent");
    for (const auto& p : s.properties) {
      auto it = v.find(p.name);
      if (it != v.end()) validate_into(*it, p.schema, join_path(path, escape_path_key(p.name)), r);
    }
  } else if (s.type == JsonType::Array) {
    for (std::size_t i = 0; i < v.size(); ++i) validate_into(v[i], *s.items, join_path(path, std::to_string(i)), r);
  }
}

}  // namespace schema_detail

// Lists every violation, not only the first. Undeclared properties are
// allowed.
inline ValidationReport validate(const Json& value, const JsonSchemaSpec& schema) {
  ValidationReport r;
  schema_detail::validate_into(value, schema, "", r);
  return r;
}

// ---------------------------------------------------------------------------
// Canonical scalars and node sets

struct EmptyObject {
  bool operator==(const EmptyObject&) const = default;
};
struct EmptyArray {
  bool operator==(const EmptyArray&) const = default;
};

struct CanonicalNumber {
  double real = 0.0;
  std::optional<std::int64_t> exact;  // set for integral values in range

  // Integers compare exactly; otherwise relative tolerance 1e-9.
  bool operator==(const CanonicalNumber& o) const noexcept {
    if (exact && o.exact) return *exact == *o.exact;
    if (real == o.real) return true;
    const double scale = std::max(std::fabs(real), std::fabs(o.real));
    return std::fabs(real - o.real) <= 1e-9 * scale;
  }
};

using CanonicalScalar = std::variant<std::nullptr_t, bool, CanonicalNumber, std::string, EmptyObject, EmptyArray>;

namespace schema_detail {

inline bool is_unicode_space(char32_t c) noexcept {
  return (c >= 0x09 && c <= 0x0D) || c == 0x20 || c == 0x85 || c == 0xA0 || c == 0x1680 ||
         (c >= 0x2000 && c <= 0x200A) || c == 0x2028 || c == 0x2029 || c == 0x202F || c == 0x205F || c == 0x3000;
}

inline std::string trim_unicode(std::string_view s) {
  const std::u32string cps = detail::to_code_points(s);
  std::size_t b = 0, e = cps.size();
  while (b < e && is_unicode_space(cps[b])) ++b;
  while (e > b && is_unicode_space(cps[e - 1])) --e;
  return detail::to_utf8(std::u32string_view(cps).substr(b, e - b));
}

}  // namespace schema_detail

// Unicode NFC via ICU; ASCII passes through untouched.
inline std::string nfc(std::string_view s) {
  bool ascii = true;
  for (char c : s) ascii = ascii && static_cast<unsigned char>(c) < 0x80;
  if (ascii) return std::string(s);
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) return std::string(s);
  const icu::UnicodeString in = icu::UnicodeString::fromUTF8(icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
  const icu::UnicodeString out = norm->normalize(in, status);
  if (U_FAILURE(status)) return std::string(s);
  std::string result;
  out.toUTF8String(result);
  return result;
}

inline std::string canonical_string(std::string_view s) { return nfc(schema_detail::trim_unicode(s)); }

// Strings: NFC, surrounding whitespace trimmed. Numbers keep an exact
// integer form when integral. Containers map to their empty sentinels.
inline CanonicalScalar canonicalize(const Json& scalar) {
  switch (scalar.type()) {
    case Json::value_t::null: return nullptr;
    case Json::value_t::boolean: return scalar.get<bool>();
    case Json::value_t::string: return canonical_string(scalar.get_ref<const std::string&>());
    case Json::value_t::number_integer: {
      const auto i = scalar.get<std::int64_t>();
      return CanonicalNumber{static_cast<double>(i), i};
    }
    case Json::value_t::number_unsigned: {
      const auto u = scalar.get<std::uint64_t>();
      CanonicalNumber n{static_cast<double>(u), std::nullopt};
      if (u <= static_cast<std::uint64_t>(INT64_MAX)) n.exact = static_cast<std::int64_t>(u);
      return n;
    }
    case Json::value_t::number_float: {
      const double d = scalar.get<double>();
      CanonicalNumber n{d, std::nullopt};
      if (std::isfinite(d) && std::floor(d) == d && std::fabs(d) < 9.0e15) n.exact = static_cast<std::int64_t>(d);
      return n;
    }
    case Json::value_t::object: return EmptyObject{};
    case Json::value_t::array: return EmptyArray{};
    default: return nullptr;
  }
}

inline std::string to_display(const CanonicalScalar& v) {
  struct {
    std::string operator()(std::nullptr_t) const { return "null"; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const CanonicalNumber& n) const { return n.exact ? std::to_string(*n.exact) : Json(n.real).dump(); }
    std::string operator()(const std::string& s) const { return Json(s).dump(); }
    std::string operator()(EmptyObject) const { return "{}"; }
    std::string operator()(EmptyArray) const { return "[]"; }
  } visitor;
  return std::visit(visitor, v);
}

// Leaf path -> canonical value. Empty containers are leaves.
using JsonNodeSet = std::map<std::string, CanonicalScalar>;

namespace schema_detail {

inline void collect_nodes(const Json& v, const std::string& path, JsonNodeSet& out) {
  if (v.is_object() && !v.empty()) {
    for (const auto& [k, child] : v.items()) collect_nodes(child, join_path(path, escape_path_key(k)), out);
  } else if (v.is_array() && !v.empty()) {
    for (std::size_t i = 0; i < v.size(); ++i) collect_nodes(v[i], join_path(path, std::to_string(i)), out);
  } else {
    out.emplace(path, canonicalize(v));
  }
}

}  // namespace schema_detail

inline JsonNodeSet to_node_set(const Json& value) {
  JsonNodeSet out;
  schema_detail::collect_nodes(value, "", out);
  return out;
}

// Entries present in both sets with equal canonical values.
inline std::size_t node_set_overlap(const JsonNodeSet& a, const JsonNodeSet& b) {
  std::size_t n = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      if (ia->second == ib->second) ++n;
      ++ia;
      ++ib;
    }
  }
  return n;
}

}  // namespace readerkit
