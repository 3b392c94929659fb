#pragma once

// Template-driven HTML -> JSON extraction. A template is a list of field
// rules, each pairing an output path with a selector, a capture mode and a
// scalar coercion.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "readerkit/detail/text.hpp"
#include "readerkit/html.hpp"
#include "readerkit/json_schema.hpp"
#include "readerkit/selector.hpp"

namespace readerkit {

class TemplateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ExtractionError : public std::runtime_error {
 public:
  ExtractionError(const std::string& what, std::string path) : std::runtime_error(what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class RequiredFieldMissing : public ExtractionError {
 public:
  explicit RequiredFieldMissing(std::string path)
      : ExtractionError("required field missing: " + path, path) {}
};

class CoercionFailure : public ExtractionError {
 public:
  CoercionFailure(std::string path, std::string raw, std::string_view target)
      : ExtractionError("cannot coerce '" + raw + "' to " + std::string(target) + " at " + path, path),
        raw_(std::move(raw)) {}
  const std::string& raw() const noexcept { return raw_; }

 private:
  std::string raw_;
};

enum class CaptureKind : std::uint8_t { Text, Attribute, List };

struct Capture {
  CaptureKind kind = CaptureKind::Text;
  std::string attribute;  // for Attribute, and List over an attribute

  static Capture parse(std::string_view s);
  std::string to_string() const;
};

struct FieldRule {
  std::vector<std::string> path;
  Selector selector;
  Capture capture;
  JsonType coerce = JsonType::String;  // scalar types only
};

struct ExtractionTemplate {
  std::vector<FieldRule> fields;

  // Accepts either a bare array of rules or {"fields": [...]}. Each rule:
  // {"path": "a/b" | ["a","b"], "selector": "...", "capture": "text" |
  // "list" | "attribute:NAME" | "list:NAME", "coerce": optional type}.
  // When "coerce" is absent it is taken from the schema leaf.
  static ExtractionTemplate from_json(const Json& j, const JsonSchemaSpec& schema);
};

namespace extract_detail {

inline bool is_scalar_type(JsonType t) noexcept {
  return t == JsonType::String || t == JsonType::Number || t == JsonType::Integer || t == JsonType::Boolean;
}

inline std::string path_string(const std::vector<std::string>& path) {
  std::string out;
  for (const auto& k : path) out = join_path(out, escape_path_key(k));
  return out;
}

// Schema node at `path`, stepping through objects only.
inline const JsonSchemaSpec* schema_at(const JsonSchemaSpec& root, const std::vector<std::string>& path) {
  const JsonSchemaSpec* s = &root;
  for (const auto& k : path) {
    if (s->type != JsonType::Object) return nullptr;
    s = s->property(k);
    if (!s) return nullptr;
  }
  return s;
}

inline std::vector<std::string> parse_path(const Json& j) {
  std::vector<std::string> out;
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
      if (i == s.size() || s[i] == '/') {
        out.push_back(s.substr(start, i - start));
        start = i + 1;
      }
    }
  } else if (j.is_array()) {
    for (const auto& k : j) {
      if (!k.is_string()) throw TemplateError("path segments must be strings");
      out.push_back(k.get<std::string>());
    }
  } else {
    throw TemplateError("'path' must be a string or an array of strings");
  }
  if (out.empty()) throw TemplateError("'path' must not be empty");
  for (const auto& k : out)
    if (k.empty()) throw TemplateError("empty path segment in " + j.dump());
  return out;
}

inline bool is_prefix(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

inline Json coerce_scalar(std::string_view raw_in, JsonType type, const std::string& path) {
  const std::string_view raw = detail::trim_ascii(raw_in);
  const std::string raw_copy(raw_in);
  switch (type) {
    case JsonType::String: return std::string(raw_in);
    case JsonType::Integer: {
      std::int64_t v = 0;
      const char* b = raw.data();
      const char* e = raw.data() + raw.size();
      if (b != e && *b == '+') ++b;
      auto [p, ec] = std::from_chars(b, e, v);
      if (raw.empty() || ec != std::errc{} || p != e) throw CoercionFailure(path, raw_copy, "integer");
      return v;
    }
    case JsonType::Number: {
      double v = 0;
      const char* b = raw.data();
      const char* e = raw.data() + raw.size();
      if (b != e && *b == '+') ++b;
      auto [p, ec] = std::from_chars(b, e, v);
      if (raw.empty() || ec != std::errc{} || p != e || !std::isfinite(v)) throw CoercionFailure(path, raw_copy, "number");
      if (std::floor(v) == v && std::fabs(v) < 9.0e15) return static_cast<std::int64_t>(v);
      return v;
    }
    case JsonType::Boolean: {
      const std::string s = detail::ascii_lowercase(raw);
      if (s == "true" || s == "yes" || s == "1") return true;
      if (s == "false" || s == "no" || s == "0") return false;
      throw CoercionFailure(path, raw_copy, "boolean");
    }
    default: break;
  }
  throw CoercionFailure(path, raw_copy, to_string(type));
}

inline void check_enum(const Json& v, const JsonSchemaSpec* leaf, const std::string& path, const std::string& raw) {
  if (!leaf || !leaf->enum_values) return;
  for (const auto& e : *leaf->enum_values)
    if (e == v) return;
  throw CoercionFailure(path, raw, "enum member");
}

inline void check_required(const Json& v, const JsonSchemaSpec& s, const std::string& path) {
  if (s.type != JsonType::Object || !v.is_object()) return;
  for (const auto& name : s.required)
    if (!v.contains(name)) throw RequiredFieldMissing(join_path(path, escape_path_key(name)));
  for (const auto& p : s.properties) {
    auto it = v.find(p.name);
    if (it != v.end()) check_required(*it, p.schema, join_path(path, escape_path_key(p.name)));
  }
}

inline std::optional<std::string> capture_one(const HtmlNode& n, const Capture& c) {
  if (c.attribute.empty()) return inner_text(n);
  const std::string* v = n.attr(c.attribute);
  if (!v) return std::nullopt;
  return *v;
}

}  // namespace extract_detail

inline Capture Capture::parse(std::string_view s) {
  Capture c;
  if (s == "text") return c;
  if (s == "list") {
    c.kind = CaptureKind::List;
    return c;
  }
  constexpr std::string_view attr_prefix = "attribute:";
  constexpr std::string_view list_prefix = "list:";
  if (s.starts_with(attr_prefix) && s.size() > attr_prefix.size()) {
    c.kind = CaptureKind::Attribute;
    c.attribute = detail::ascii_lowercase(s.substr(attr_prefix.size()));
    return c;
  }
  if (s.starts_with(list_prefix) && s.size() > list_prefix.size()) {
    c.kind = CaptureKind::List;
    c.attribute = detail::ascii_lowercase(s.substr(list_prefix.size()));
    return c;
  }
  throw TemplateError("unknown capture mode '" + std::string(s) + "'");
}

inline std::string Capture::to_string() const {
  switch (kind) {
    case CaptureKind::Text: return "text";
    case CaptureKind::Attribute: return "attribute:" + attribute;
    case CaptureKind::List: return attribute.empty() ? "list" : "list:" + attribute;
  }
  return "?";
}

inline ExtractionTemplate ExtractionTemplate::from_json(const Json& j, const JsonSchemaSpec& schema) {
  using namespace extract_detail;
  const Json* rules = &j;
  if (j.is_object()) {
    auto it = j.find("fields");
    if (it == j.end()) throw TemplateError("template object needs a 'fields' array");
    rules = &*it;
  }
  if (!rules->is_array()) throw TemplateError("template must be an array of field rules");
  if (schema.type != JsonType::Object) throw TemplateError("template extraction needs an object schema");

  ExtractionTemplate t;
  for (const auto& r : *rules) {
    if (!r.is_object()) throw TemplateError("field rule must be an object");
    FieldRule f;
    f.path = parse_path(r.value("path", Json()));
    const std::string where = path_string(f.path);
    auto sel = r.find("selector");
    if (sel == r.end() || !sel->is_string()) throw TemplateError("rule '" + where + "' needs a string 'selector'");
    try {
      f.selector = Selector::parse(sel->get<std::string>());
    } catch (const SelectorError& e) {
      throw TemplateError("rule '" + where + "': " + e.what());
    }
    auto cap = r.find("capture");
    if (cap != r.end()) {
      if (!cap->is_string()) throw TemplateError("rule '" + where + "': 'capture' must be a string");
      f.capture = Capture::parse(cap->get<std::string>());
    }

    const JsonSchemaSpec* leaf = schema_at(schema, f.path);
    if (!leaf) throw TemplateError("rule path '" + where + "' is not declared in the schema");
    const JsonSchemaSpec* scalar = leaf;
    if (f.capture.kind == CaptureKind::List) {
      if (leaf->type != JsonType::Array) throw TemplateError("list capture at '" + where + "' needs an array schema");
      scalar = leaf->items.get();
    }
    if (!is_scalar_type(scalar->type))
      throw TemplateError("rule '" + where + "' targets non-scalar type " + std::string(to_string(scalar->type)));

    f.coerce = scalar->type;
    if (auto co = r.find("coerce"); co != r.end()) {
      auto ty = co->is_string() ? parse_json_type(co->get<std::string>()) : std::nullopt;
      if (!ty || !is_scalar_type(*ty)) throw TemplateError("rule '" + where + "': bad 'coerce' " + co->dump());
      const bool compatible = *ty == scalar->type || (*ty == JsonType::Integer && scalar->type == JsonType::Number);
      if (!compatible)
        throw TemplateError("rule '" + where + "': coerce " + std::string(to_string(*ty)) + " conflicts with schema type " +
                            std::string(to_string(scalar->type)));
      f.coerce = *ty;
    }

    for (const auto& other : t.fields)
      if (is_prefix(other.path, f.path) || is_prefix(f.path, other.path))
        throw TemplateError("rule paths overlap at '" + where + "'");
    t.fields.push_back(std::move(f));
  }
  return t;
}

// Runs every rule against `root`. A rule with no matching element leaves
// its field absent; required fields absent afterwards raise
// RequiredFieldMissing. The result always validates against `schema`.
inline Json extract_json(const HtmlNode& root, const JsonSchemaSpec& schema, const ExtractionTemplate& tmpl) {
  using namespace extract_detail;
  Json out = Json::object();
  for (const auto& f : tmpl.fields) {
    const std::string where = path_string(f.path);
    const JsonSchemaSpec* leaf = schema_at(schema, f.path);
    const auto matches = select(root, f.selector);
    Json value;
    if (f.capture.kind == CaptureKind::List) {
      value = Json::array();
      const JsonSchemaSpec* item = leaf ? leaf->items.get() : nullptr;
      for (const HtmlNode* n : matches) {
        auto raw = capture_one(*n, f.capture);
        if (!raw) continue;
        const std::string item_path = join_path(where, std::to_string(value.size()));
        Json v = coerce_scalar(*raw, f.coerce, item_path);
        check_enum(v, item, item_path, *raw);
        value.push_back(std::move(v));
      }
    } else {
      std::optional<std::string> raw;
      for (const HtmlNode* n : matches) {
        raw = capture_one(*n, f.capture);
        if (raw) break;
      }
      if (!raw) continue;
      value = coerce_scalar(*raw, f.coerce, where);
      check_enum(value, leaf, where, *raw);
    }
    Json* slot = &out;
    for (std::size_t i = 0; i + 1 < f.path.size(); ++i) slot = &(*slot)[f.path[i]];
    (*slot)[f.path.back()] = std::move(value);
  }
  check_required(out, schema, "");
  return out;
}

inline Json extract_json(const HtmlNode& root, const JsonSchemaSpec& schema, const Json& template_json) {
  return extract_json(root, schema, ExtractionTemplate::from_json(template_json, schema));
}

}  // namespace readerkit
