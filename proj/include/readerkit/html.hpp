#pragma once

// Lenient HTML parsing into a small DOM.
//
// The parser is a tag-soup builder, not an HTML5 tree constructor: it keeps
// unknown tags, closes p/li/dt/dd/tr/td/th/option implicitly, drops stray
// end tags, and never fails. Script and style bodies become a single RawText
// child. Iframe content is discarded.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <unicode/ucnv.h>

#include "readerkit/detail/text.hpp"

namespace readerkit {

enum class NodeKind : std::uint8_t { Element, Text, Comment, RawText };

struct Attribute {
  std::string name;
  std::string value;

  bool operator==(const Attribute&) const = default;
};

struct HtmlNode {
  NodeKind kind = NodeKind::Element;
  std::string tag;  // lowercase; "#document" for the synthetic root
  std::vector<Attribute> attrs;
  std::vector<HtmlNode> children;
  std::string text;  // Text, Comment and RawText payload

  bool operator==(const HtmlNode&) const = default;

  bool is_element() const noexcept { return kind == NodeKind::Element; }
  bool is_element(std::string_view t) const noexcept { return kind == NodeKind::Element && tag == t; }
  bool is_text() const noexcept { return kind == NodeKind::Text; }

  const std::string* attr(std::string_view name) const noexcept {
    for (const auto& a : attrs)
      if (a.name == name) return &a.value;
    return nullptr;
  }

  static HtmlNode element(std::string tag, std::vector<Attribute> attrs = {},
                          std::vector<HtmlNode> children = {}) {
    HtmlNode n;
    n.tag = std::move(tag);
    n.attrs = std::move(attrs);
    n.children = std::move(children);
    return n;
  }
  static HtmlNode make_text(std::string t) { return leaf(NodeKind::Text, std::move(t)); }
  static HtmlNode make_comment(std::string t) { return leaf(NodeKind::Comment, std::move(t)); }
  static HtmlNode make_raw_text(std::string t) { return leaf(NodeKind::RawText, std::move(t)); }

 private:
  static HtmlNode leaf(NodeKind k, std::string t) {
    HtmlNode n;
    n.kind = k;
    n.text = std::move(t);
    return n;
  }
};

inline constexpr std::string_view kRootTag = "#document";
inline constexpr std::size_t kMaxNestingDepth = 512;

namespace html_detail {

using detail::ascii_lower;
using detail::is_ascii_alpha;
using detail::is_ascii_space;

template <std::size_t N>
constexpr bool in_set(std::string_view tag, const detail::TagSet<N>& set) noexcept {
  return set.contains(tag);
}

inline constexpr detail::TagSet kVoid{
    "area", "base", "br", "col", "embed", "hr", "img", "input",
    "link", "meta", "param", "source", "track", "wbr"};

// Start tags that close an open <p> in scope.
inline constexpr detail::TagSet kClosesP{
    "address", "article", "aside", "blockquote", "center", "details", "dialog", "dir",
    "div", "dl", "fieldset", "figcaption", "figure", "footer", "form", "h1",
    "h2", "h3", "h4", "h5", "h6", "header", "hgroup", "hr",
    "main", "menu", "nav", "ol", "p", "pre", "section", "summary",
    "table", "ul", "li", "dd", "dt", "listing"};

inline constexpr detail::TagSet kScopeBoundary{
    "html", "table", "td", "th", "caption", "marquee", "object", "applet", "template", "button"};

inline constexpr detail::TagSet kEndTagBoundary{
    "td", "th", "table", "caption", "template", "object", "marquee", "applet"};

// Elements that stop the implicit li/dt/dd close walk.
inline constexpr detail::TagSet kSpecial{
    "article", "aside", "blockquote", "body", "caption", "center", "details", "dialog",
    "dir", "dl", "fieldset", "figcaption", "figure", "footer", "form", "header",
    "hgroup", "html", "main", "menu", "nav", "ol", "ul", "section",
    "summary", "table", "tbody", "td", "tfoot", "th", "thead", "tr", "template"};

inline constexpr detail::TagSet kHeadContent{
    "title", "meta", "link", "style", "script", "base", "noscript", "template"};

inline constexpr detail::TagSet kTableSection{"table", "tbody", "thead", "tfoot"};

inline bool is_heading(std::string_view t) noexcept {
  return t.size() == 2 && t[0] == 'h' && t[1] >= '1' && t[1] <= '6';
}

inline std::string decode_entities(std::string_view s) {
  if (s.find('&') == std::string_view::npos) return std::string(s);
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const std::size_t amp = s.find('&', i);
    if (amp == std::string_view::npos) {
      out.append(s.substr(i));
      break;
    }
    out.append(s.substr(i, amp - i));
    i = amp;
    std::size_t j = amp + 1;
    if (j < s.size() && s[j] == '#') {
      ++j;
      const bool hex = j < s.size() && (s[j] == 'x' || s[j] == 'X');
      if (hex) ++j;
      const std::size_t digits_begin = j;
      std::uint32_t value = 0;
      bool overflow = false;
      while (j < s.size()) {
        const char c = s[j];
        int d = -1;
        if (detail::is_ascii_digit(c)) d = c - '0';
        else if (hex && c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (hex && c >= 'A' && c <= 'F') d = c - 'A' + 10;
        if (d < 0) break;
        if (!overflow) {
          value = value * (hex ? 16u : 10u) + static_cast<std::uint32_t>(d);
          if (value > 0x10FFFF) overflow = true;
        }
        ++j;
      }
      if (j == digits_begin) {
        out.push_back('&');
        ++i;
        continue;
      }
      if (j < s.size() && s[j] == ';') ++j;
      char32_t cp = overflow || value == 0 ? detail::kReplacementChar : static_cast<char32_t>(value);
      detail::append_utf8(out, cp);
      i = j;
      continue;
    }
    struct Named { std::string_view name; std::string_view utf8; };
    static constexpr std::array<Named, 6> kNamed = {{{"amp;", "&"}, {"lt;", "<"}, {"gt;", ">"},
                                                     {"quot;", "\""}, {"apos;", "'"},
                                                     {"nbsp;", "\xC2\xA0"}}};
    bool matched = false;
    for (const auto& n : kNamed) {
      if (s.substr(amp + 1, n.name.size()) == n.name) {
        out.append(n.utf8);
        i = amp + 1 + n.name.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      out.push_back('&');
      ++i;
    }
  }
  return out;
}

// Looks for a meta charset declaration in the first 1024 bytes.
inline std::optional<std::string> sniff_meta_charset(std::string_view bytes) {
  const std::string head = detail::ascii_lowercase(bytes.substr(0, 1024));
  std::size_t pos = 0;
  while ((pos = head.find("<meta", pos)) != std::string::npos) {
    const std::size_t end = head.find('>', pos);
    const std::string_view tag = std::string_view(head).substr(
        pos, end == std::string::npos ? std::string::npos : end - pos);
    const std::size_t cs = tag.find("charset");
    if (cs != std::string_view::npos) {
      std::size_t k = cs + 7;
      while (k < tag.size() && is_ascii_space(tag[k])) ++k;
      if (k < tag.size() && tag[k] == '=') {
        ++k;
        while (k < tag.size() && (is_ascii_space(tag[k]) || tag[k] == '"' || tag[k] == '\'')) ++k;
        std::size_t b = k;
        while (k < tag.size() && (detail::is_ascii_digit(tag[k]) || is_ascii_alpha(tag[k]) ||
                                  tag[k] == '-' || tag[k] == '_' || tag[k] == ':' || tag[k] == '.'))
          ++k;
        if (k > b) return std::string(tag.substr(b, k - b));
      }
    }
    pos += 5;
  }
  return std::nullopt;
}

inline bool is_utf8_label(std::string_view label) {
  return label == "utf-8" || label == "utf8" || label == "unicode-1-1-utf-8" ||
         label == "us-ascii" || label == "ascii";
}

// Transcodes `bytes` to UTF-8 with ICU; nullopt if the charset is unknown.
inline std::optional<std::string> transcode_with_icu(std::string_view bytes, const std::string& charset) {
  UErrorCode status = U_ZERO_ERROR;
  UConverter* conv = ucnv_open(charset.c_str(), &status);
  if (U_FAILURE(status) || conv == nullptr) return std::nullopt;
  ucnv_close(conv);
  std::string out(bytes.size() * 4 + 4, '\0');
  status = U_ZERO_ERROR;
  const int32_t n = ucnv_convert("UTF-8", charset.c_str(), out.data(), static_cast<int32_t>(out.size()),
                                 bytes.data(), static_cast<int32_t>(bytes.size()), &status);
  if (U_FAILURE(status)) return std::nullopt;
  out.resize(static_cast<std::size_t>(n));
  return out;
}

inline std::string normalize_newlines(std::string s) {
  if (s.find('\r') == std::string::npos) return s;
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\r') {
      out.push_back('\n');
      if (i + 1 < s.size() && s[i + 1] == '\n') ++i;
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

class TreeBuilder {
 public:
  explicit TreeBuilder(std::string_view src) : src_(src) {
    root_.tag = std::string(kRootTag);
    stack_.push_back(&root_);
  }

  HtmlNode run() {
    while (pos_ < src_.size()) {
      const std::size_t lt = src_.find('<', pos_);
      if (lt == std::string_view::npos) {
        add_text(src_.substr(pos_));
        break;
      }
      if (lt > pos_) add_text(src_.substr(pos_, lt - pos_));
      pos_ = lt;
      if (!markup()) {
        add_text(src_.substr(lt, 1));
        pos_ = lt + 1;
      }
    }
    flush_text();
    return std::move(root_);
  }

 private:
  HtmlNode& current() { return *stack_.back(); }

  void add_text(std::string_view raw) {
    if (!pending_text_.empty() || !raw.empty()) pending_text_.append(raw);
  }

  void flush_text() {
    if (pending_text_.empty()) return;
    std::string decoded = decode_entities(pending_text_);
    pending_text_.clear();
    if (decoded.empty()) return;
    const bool blank = std::all_of(decoded.begin(), decoded.end(), [](char c) { return is_ascii_space(c); });
    if (!blank) close_head();
    append_text_node(current(), std::move(decoded));
  }

  static void append_text_node(HtmlNode& parent, std::string text) {
    if (!parent.children.empty() && parent.children.back().kind == NodeKind::Text) {
      parent.children.back().text.append(text);
    } else {
      parent.children.push_back(HtmlNode::make_text(std::move(text)));
    }
  }

  // Returns false when '<' does not start markup and must be literal text.
  bool markup() {
    const std::size_t n = src_.size();
    const std::size_t at = pos_ + 1;
    if (at >= n) return false;
    const char c = src_[at];
    if (c == '!') {
      flush_text();
      if (src_.substr(at + 1, 2) == "--") {
        const std::size_t body = at + 3;
        const std::size_t end = src_.find("-->", body);
        const std::string_view text = src_.substr(body, end == std::string_view::npos ? std::string_view::npos : end - body);
        current().children.push_back(HtmlNode::make_comment(std::string(text)));
        pos_ = end == std::string_view::npos ? n : end + 3;
        return true;
      }
      const std::size_t end = src_.find('>', at);
      const std::string_view text = src_.substr(at + 1, end == std::string_view::npos ? std::string_view::npos : end - at - 1);
      pos_ = end == std::string_view::npos ? n : end + 1;
      if (!detail::iequals_ascii(text.substr(0, 7), "doctype"))
        current().children.push_back(HtmlNode::make_comment(std::string(text)));
      return true;
    }
    if (c == '?') {
      flush_text();
      const std::size_t end = src_.find('>', at);
      const std::string_view text = src_.substr(at, end == std::string_view::npos ? std::string_view::npos : end - at);
      current().children.push_back(HtmlNode::make_comment(std::string(text)));
      pos_ = end == std::string_view::npos ? n : end + 1;
      return true;
    }
    if (c == '/') {
      if (at + 1 >= n) return false;
      const char d = src_[at + 1];
      if (d == '>') {
        pos_ = at + 2;
        return true;
      }
      flush_text();
      if (!is_ascii_alpha(d)) {
        const std::size_t end = src_.find('>', at);
        const std::string_view text = src_.substr(at + 1, end == std::string_view::npos ? std::string_view::npos : end - at - 1);
        current().children.push_back(HtmlNode::make_comment(std::string(text)));
        pos_ = end == std::string_view::npos ? n : end + 1;
        return true;
      }
      std::size_t k = at + 1;
      std::string name;
      while (k < n && !is_ascii_space(src_[k]) && src_[k] != '/' && src_[k] != '>') name.push_back(ascii_lower(src_[k++]));
      const std::size_t end = src_.find('>', k);
      pos_ = end == std::string_view::npos ? n : end + 1;
      if (end != std::string_view::npos) end_tag(name);
      return true;
    }
    if (!is_ascii_alpha(c)) return false;
    flush_text();
    return start_tag();
  }

  bool start_tag() {
    const std::size_t n = src_.size();
    std::size_t k = pos_ + 1;
    HtmlNode el;
    while (k < n && !is_ascii_space(src_[k]) && src_[k] != '/' && src_[k] != '>') el.tag.push_back(ascii_lower(src_[k++]));
    bool closed = false;
    while (k < n) {
      const char c = src_[k];
      if (is_ascii_space(c) || c == '/') {
        ++k;
        continue;
      }
      if (c == '>') {
        closed = true;
        ++k;
        break;
      }
      std::string name;
      name.push_back(ascii_lower(c));
      ++k;
      while (k < n && !is_ascii_space(src_[k]) && src_[k] != '/' && src_[k] != '>' && src_[k] != '=')
        name.push_back(ascii_lower(src_[k++]));
      std::size_t m = k;
      while (m < n && is_ascii_space(src_[m])) ++m;
      std::string value;
      if (m < n && src_[m] == '=') {
        ++m;
        while (m < n && is_ascii_space(src_[m])) ++m;
        if (m < n && (src_[m] == '"' || src_[m] == '\'')) {
          const char q = src_[m];
          const std::size_t close = src_.find(q, m + 1);
          if (close == std::string_view::npos) {
            k = n;
            break;
          }
          value = decode_entities(src_.substr(m + 1, close - m - 1));
          k = close + 1;
        } else {
          std::size_t b = m;
          while (m < n && !is_ascii_space(src_[m]) && src_[m] != '>') ++m;
          value = decode_entities(src_.substr(b, m - b));
          k = m;
        }
      }
      const bool dup = std::any_of(el.attrs.begin(), el.attrs.end(), [&](const Attribute& a) { return a.name == name; });
      if (!dup) el.attrs.push_back({std::move(name), std::move(value)});
    }
    if (!closed) {
      // EOF inside a tag: the tag is dropped.
      pos_ = n;
      return true;
    }
    pos_ = k;
    open_element(std::move(el));
    return true;
  }

  void close_head() {
    if (!head_open_) return;
    head_open_ = false;
    for (std::size_t i = stack_.size(); i-- > 1;) {
      if (stack_[i]->tag == "head") {
        stack_.resize(i);
        return;
      }
    }
  }

  // Index of the nearest open `tag`, scanning down until a boundary tag.
  template <std::size_t N>
  std::optional<std::size_t> find_open(std::string_view tag, const detail::TagSet<N>& boundary) const {
    for (std::size_t i = stack_.size(); i-- > 1;) {
      const std::string_view t = stack_[i]->tag;
      if (t == tag) return i;
      if (in_set(t, boundary)) return std::nullopt;
    }
    return std::nullopt;
  }

  void pop_to_below(std::size_t index) { stack_.resize(index); }

  void implicit_close(std::string_view tag) {
    if (!in_set(tag, kHeadContent)) close_head();
    if (tag == "body") close_head();
    if (in_set(tag, kClosesP)) {
      if (auto i = find_open("p", kScopeBoundary)) pop_to_below(*i);
    }
    if (tag == "li") {
      close_list_item({"li"});
    } else if (tag == "dt" || tag == "dd") {
      close_list_item({"dt", "dd"});
    } else if (tag == "option") {
      if (current().tag == "option") stack_.pop_back();
    } else if (tag == "optgroup") {
      if (current().tag == "option") stack_.pop_back();
      if (current().tag == "optgroup") stack_.pop_back();
    } else if (tag == "tr" || tag == "thead" || tag == "tbody" || tag == "tfoot" || tag == "caption" ||
               tag == "colgroup") {
      const bool section = tag != "tr";
      for (std::size_t i = stack_.size(); i-- > 1;) {
        const std::string_view t = stack_[i]->tag;
        if (t == "table" || (!section && in_set(t, kTableSection))) {
          pop_to_below(i + 1);
          break;
        }
      }
    } else if (tag == "td" || tag == "th") {
      for (std::size_t i = stack_.size(); i-- > 1;) {
        const std::string_view t = stack_[i]->tag;
        if (t == "tr") {
          pop_to_below(i + 1);
          break;
        }
        if (in_set(t, kTableSection)) break;
      }
    } else if (is_heading(tag)) {
      if (is_heading(current().tag)) stack_.pop_back();
    } else if (tag == "a") {
      if (auto i = find_open("a", kEndTagBoundary)) pop_to_below(*i);
    }
  }

  void close_list_item(std::initializer_list<std::string_view> targets) {
    for (std::size_t i = stack_.size(); i-- > 1;) {
      const std::string_view t = stack_[i]->tag;
      if (std::find(targets.begin(), targets.end(), t) != targets.end()) {
        pop_to_below(i);
        return;
      }
      if (in_set(t, kSpecial) || in_set(t, kScopeBoundary)) return;
    }
  }

  void open_element(HtmlNode el) {
    implicit_close(el.tag);
    const std::string_view tag = el.tag;
    const bool raw = tag == "script" || tag == "style";
    const bool rcdata = tag == "title" || tag == "textarea";
    const bool discard = tag == "iframe";
    const bool too_deep = stack_.size() > kMaxNestingDepth;

    std::string body;
    if (raw || rcdata || discard) body = consume_until_end_tag(tag);

    const bool is_void = in_set(tag, kVoid);
    head_open_ |= tag == "head";
    if (too_deep) return;
    auto& parent = current();
    parent.children.push_back(std::move(el));
    HtmlNode& node = parent.children.back();
    if (raw || rcdata || discard) {
      if (!body.empty() && raw) node.children.push_back(HtmlNode::make_raw_text(std::move(body)));
      if (!body.empty() && rcdata) {
        std::string decoded = decode_entities(body);
        if (!decoded.empty()) node.children.push_back(HtmlNode::make_text(std::move(decoded)));
      }
      return;
    }
    if (is_void) return;
    stack_.push_back(&node);
  }

  // Consumes raw content up to `</tag` followed by space, '/', '>' or EOF.
  std::string consume_until_end_tag(std::string_view tag) {
    const std::size_t n = src_.size();
    std::size_t k = pos_;
    while (true) {
      const std::size_t lt = src_.find("</", k);
      if (lt == std::string_view::npos) {
        std::string body(src_.substr(pos_));
        pos_ = n;
        return body;
      }
      const std::size_t name_at = lt + 2;
      if (name_at + tag.size() <= n && detail::iequals_ascii(src_.substr(name_at, tag.size()), tag)) {
        const std::size_t after = name_at + tag.size();
        if (after == n || is_ascii_space(src_[after]) || src_[after] == '/' || src_[after] == '>') {
          std::string body(src_.substr(pos_, lt - pos_));
          const std::size_t gt = src_.find('>', after);
          pos_ = gt == std::string_view::npos ? n : gt + 1;
          return body;
        }
      }
      k = lt + 2;
    }
  }

  void end_tag(std::string_view tag) {
    if (in_set(tag, kVoid)) return;
    std::optional<std::size_t> at;
    if (tag == "td" || tag == "th" || tag == "tr" || tag == "tbody" || tag == "thead" || tag == "tfoot" ||
        tag == "caption") {
      static constexpr detail::TagSet kTable{"table"};
      at = find_open(tag, kTable);
    } else if (tag == "table") {
      static constexpr detail::TagSet<0> kNone{};
      at = find_open(tag, kNone);
    } else {
      at = find_open(tag, kEndTagBoundary);
    }
    if (at) pop_to_below(*at);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  HtmlNode root_;
  std::vector<HtmlNode*> stack_;
  std::string pending_text_;
  bool head_open_ = false;
};

inline void serialize_into(const HtmlNode& node, std::string& out);

inline void escape_text_into(std::string_view s, std::string& out) {
  for (char c : s) {
    switch (c) {
      case '&': out.append("&amp;"); break;
      case '<': out.append("&lt;"); break;
      case '>': out.append("&gt;"); break;
      case '\r': out.append("&#13;"); break;
      default: out.push_back(c);
    }
  }
}

inline void escape_attr_into(std::string_view s, std::string& out) {
  for (char c : s) {
    switch (c) {
      case '&': out.append("&amp;"); break;
      case '"': out.append("&quot;"); break;
      case '\r': out.append("&#13;"); break;
      default: out.push_back(c);
    }
  }
}

inline void serialize_into(const HtmlNode& node, std::string& out) {
  switch (node.kind) {
    case NodeKind::Text: escape_text_into(node.text, out); return;
    case NodeKind::RawText: out.append(node.text); return;
    case NodeKind::Comment:
      out.append("<!--");
      out.append(node.text);
      out.append("-->");
      return;
    case NodeKind::Element: break;
  }
  const bool root = node.tag == kRootTag;
  if (!root) {
    out.push_back('<');
    out.append(node.tag);
    for (const auto& a : node.attrs) {
      out.push_back(' ');
      out.append(a.name);
      out.append("=\"");
      escape_attr_into(a.value, out);
      out.push_back('"');
    }
    out.push_back('>');
    if (in_set(node.tag, kVoid)) return;
  }
  for (const auto& c : node.children) serialize_into(c, out);
  if (!root) {
    out.append("</");
    out.append(node.tag);
    out.push_back('>');
  }
}

}  // namespace html_detail

inline bool is_void_element(std::string_view tag) noexcept { return html_detail::in_set(tag, html_detail::kVoid); }

// Converts raw bytes to UTF-8. `encoding_hint` wins over a meta charset
// declaration; without either the input is taken as UTF-8. Undecodable
// bytes become U+FFFD.
inline std::string decode_document(std::string_view bytes, std::optional<std::string_view> encoding_hint = std::nullopt) {
  if (bytes.size() >= 3 && bytes.substr(0, 3) == "\xEF\xBB\xBF") bytes.remove_prefix(3);
  std::optional<std::string> charset;
  if (encoding_hint && !encoding_hint->empty()) charset = detail::ascii_lowercase(detail::trim_ascii(*encoding_hint));
  else charset = html_detail::sniff_meta_charset(bytes);
  std::string text;
  if (charset && !html_detail::is_utf8_label(*charset)) {
    if (auto converted = html_detail::transcode_with_icu(bytes, *charset)) text = detail::sanitize_utf8(*converted);
    else text = detail::sanitize_utf8(bytes);
  } else {
    text = detail::sanitize_utf8(bytes);
  }
  return html_detail::normalize_newlines(std::move(text));
}

inline HtmlNode parse_html(std::string_view bytes, std::optional<std::string_view> encoding_hint = std::nullopt) {
  const std::string text = decode_document(bytes, encoding_hint);
  return html_detail::TreeBuilder(text).run();
}

// Normalized HTML: every element explicitly closed, attributes double-quoted.
inline std::string serialize_html(const HtmlNode& node) {
  std::string out;
  html_detail::serialize_into(node, out);
  return out;
}

namespace html_detail {

struct TextCollector {
  std::string out;
  bool pending_space = false;

  void add(std::string_view s) {
    for (char c : s) {
      if (is_ascii_space(c)) {
        pending_space = !out.empty();
        continue;
      }
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.push_back(c);
    }
  }

  void walk(const HtmlNode& n) {
    if (n.kind == NodeKind::Text) {
      add(n.text);
      return;
    }
    if (n.kind != NodeKind::Element) return;
    for (const auto& c : n.children) walk(c);
  }
};

}  // namespace html_detail

// Text content of `node`: Text descendants in document order, ASCII
// whitespace runs collapsed, trimmed. Comments and raw text are skipped.
inline std::string inner_text(const HtmlNode& node) {
  html_detail::TextCollector tc;
  tc.walk(node);
  return std::move(tc.out);
}

template <typename Fn>
void for_each_preorder(const HtmlNode& node, Fn&& fn) {
  fn(node);
  for (const auto& c : node.children) for_each_preorder(c, fn);
}

inline std::size_t count_elements(const HtmlNode& node) {
  std::size_t n = 0;
  for_each_preorder(node, [&](const HtmlNode& x) { n += x.is_element() ? 1 : 0; });
  return n;
}

}  // namespace readerkit
