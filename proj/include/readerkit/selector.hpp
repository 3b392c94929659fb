#pragma once

// Minimal CSS-like selectors: compound steps (tag, #id, .class, [attr] and
// [attr=value]) joined by the descendant combinator only.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "readerkit/detail/text.hpp"
#include "readerkit/html.hpp"

namespace readerkit {

class SelectorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AttributeFilter {
  std::string name;
  std::optional<std::string> value;  // nullopt: presence test

  bool operator==(const AttributeFilter&) const = default;
};

struct SelectorStep {
  std::optional<std::string> tag;
  std::optional<std::string> id;
  std::vector<std::string> classes;
  std::vector<AttributeFilter> attributes;

  bool empty() const noexcept { return !tag && !id && classes.empty() && attributes.empty(); }
  bool operator==(const SelectorStep&) const = default;
};

struct Selector {
  std::vector<SelectorStep> steps;

  bool operator==(const Selector&) const = default;

  static Selector parse(std::string_view text);
  std::string to_string() const;
};

namespace selector_detail {

inline bool is_ident_char(char c) noexcept {
  return detail::is_ascii_alpha(c) || detail::is_ascii_digit(c) || c == '-' || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Selector run() {
    Selector sel;
    skip_space();
    while (i_ < s_.size()) {
      sel.steps.push_back(step());
      skip_space();
    }
    if (sel.steps.empty()) fail("empty selector");
    return sel;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw SelectorError("invalid selector '" + std::string(s_) + "': " + why);
  }

  void skip_space() {
    while (i_ < s_.size() && detail::is_ascii_space(s_[i_])) ++i_;
  }

  std::string ident() {
    const std::size_t b = i_;
    while (i_ < s_.size() && is_ident_char(s_[i_])) ++i_;
    if (i_ == b) fail("expected identifier at offset " + std::to_string(b));
    return std::string(s_.substr(b, i_ - b));
  }

  SelectorStep step() {
    SelectorStep st;
    if (i_ < s_.size() && is_ident_char(s_[i_])) st.tag = detail::ascii_lowercase(ident());
    while (i_ < s_.size() && !detail::is_ascii_space(s_[i_])) {
      const char c = s_[i_++];
      if (c == '#') {
        if (st.id) fail("duplicate id filter");
        st.id = ident();
      } else if (c == '.') {
        st.classes.push_back(ident());
      } else if (c == '[') {
        st.attributes.push_back(attribute());
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
    }
    if (st.empty()) fail("empty step");
    return st;
  }

  AttributeFilter attribute() {
    skip_space();
    AttributeFilter f;
    f.name = detail::ascii_lowercase(ident());
    skip_space();
    if (i_ < s_.size() && s_[i_] == '=') {
      ++i_;
      skip_space();
      if (i_ < s_.size() && (s_[i_] == '"' || s_[i_] == '\'')) {
        const char q = s_[i_++];
        const std::size_t close = s_.find(q, i_);
        if (close == std::string_view::npos) fail("unterminated attribute value");
        f.value = std::string(s_.substr(i_, close - i_));
        i_ = close + 1;
      } else {
        f.value = ident();
      }
      skip_space();
    }
    if (i_ >= s_.size() || s_[i_] != ']') fail("expected ']'");
    ++i_;
    return f;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

inline bool has_class(const HtmlNode& n, std::string_view cls) {
  const std::string* attr = n.attr("class");
  if (!attr) return false;
  for (auto token : detail::split_ascii_whitespace(*attr))
    if (token == cls) return true;
  return false;
}

inline bool matches_step(const HtmlNode& n, const SelectorStep& st) {
  if (!n.is_element() || n.tag == kRootTag) return false;
  if (st.tag && n.tag != *st.tag) return false;
  if (st.id) {
    const std::string* id = n.attr("id");
    if (!id || *id != *st.id) return false;
  }
  for (const auto& c : st.classes)
    if (!has_class(n, c)) return false;
  for (const auto& f : st.attributes) {
    const std::string* v = n.attr(f.name);
    if (!v) return false;
    if (f.value && *v != *f.value) return false;
  }
  return true;
}

// Right-to-left greedy matching is exact for descendant-only chains.
inline bool matches_chain(const std::vector<const HtmlNode*>& ancestors, const HtmlNode& n, const Selector& sel) {
  const auto& steps = sel.steps;
  if (!matches_step(n, steps.back())) return false;
  std::size_t want = steps.size() - 1;
  for (std::size_t a = ancestors.size(); want > 0 && a-- > 0;) {
    if (matches_step(*ancestors[a], steps[want - 1])) --want;
  }
  return want == 0;
}

inline void select_into(const HtmlNode& n, const Selector& sel, std::vector<const HtmlNode*>& ancestors,
                        std::vector<const HtmlNode*>& out) {
  if (!n.is_element()) return;
  if (matches_chain(ancestors, n, sel)) out.push_back(&n);
  ancestors.push_back(&n);
  for (const auto& c : n.children) select_into(c, sel, ancestors, out);
  ancestors.pop_back();
}

}  // namespace selector_detail

inline Selector Selector::parse(std::string_view text) { return selector_detail::Parser(text).run(); }

inline std::string Selector::to_string() const {
  std::string out;
  for (const auto& st : steps) {
    if (!out.empty()) out.push_back(' ');
    if (st.tag) out += *st.tag;
    if (st.id) out += "#" + *st.id;
    for (const auto& c : st.classes) out += "." + c;
    for (const auto& a : st.attributes) {
      out += "[" + a.name;
      if (a.value) out += "=\"" + *a.value + "\"";
      out += "]";
    }
  }
  return out;
}

// Every element under `root` matching `sel`, in document order. The
// returned pointers borrow from `root`.
inline std::vector<const HtmlNode*> select(const HtmlNode& root, const Selector& sel) {
  std::vector<const HtmlNode*> out;
  if (sel.steps.empty()) return out;
  std::vector<const HtmlNode*> ancestors;
  selector_detail::select_into(root, sel, ancestors, out);
  return out;
}

inline std::vector<const HtmlNode*> select(const HtmlNode& root, std::string_view selector_text) {
  return select(root, Selector::parse(selector_text));
}

}  // namespace readerkit
