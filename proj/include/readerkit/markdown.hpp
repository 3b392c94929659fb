#pragma once

// HTML to GitHub-flavored Markdown.
//
// convert() runs three passes: boilerplate removal, scope resolution (main
// content or explicit include selectors, minus exclude selectors) and
// rendering. Element mapping:
//
//   h1-h6 -> '#' x n        p -> paragraph         br -> trailing backslash
//   hr -> ---               strong/b -> **x**      em/i -> *x*
//   del/s -> ~~x~~          code -> `x`            pre -> fenced block
//   a -> [x](href)          img -> ![alt](src)     ul/li -> "- ", ol/li -> "1. "
//   blockquote -> "> "      table -> pipe table    figcaption -> *caption*
//
// Text is escaped so that every Markdown metacharacter in the output is
// syntax; stripping the syntax gives back the source text.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "readerkit/detail/text.hpp"
#include "readerkit/html.hpp"
#include "readerkit/selector.hpp"

namespace readerkit {

enum class ExtractionMode : std::uint8_t { MainContent, Scoped };

struct ExtractionInstruction {
  ExtractionMode mode = ExtractionMode::MainContent;
  std::vector<Selector> include;
  std::vector<Selector> exclude;

  static ExtractionInstruction main_content() { return {}; }
  static ExtractionInstruction scoped(std::vector<Selector> include, std::vector<Selector> exclude = {}) {
    return {ExtractionMode::Scoped, std::move(include), std::move(exclude)};
  }
};

class InstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Scoped mode matched nothing.
class ScopeEmpty : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MarkdownStats {
  std::size_t element_count = 0;
  std::size_t char_count = 0;  // Unicode scalar values in body
};

struct MarkdownDoc {
  std::string body;
  std::string source_id;
  MarkdownStats stats;
};

inline constexpr std::array<std::string_view, 11> kBoilerplatePatterns = {
    "nav", "menu", "footer", "sidebar", "banner", "ad-", "-ad", "advert", "promo", "cookie", "popup"};

namespace md_detail {

using detail::is_ascii_space;

template <std::size_t N>
bool in_set(std::string_view tag, const detail::TagSet<N>& set) noexcept {
  return set.contains(tag);
}

inline constexpr detail::TagSet kBoilerplateTags{
    "nav", "footer", "aside", "form", "iframe", "noscript", "script", "style", "head", "template"};

// Container blocks eligible as main content.
inline constexpr detail::TagSet kContentCandidates{"div", "section", "td", "center"};

inline constexpr detail::TagSet kBlockContainers{
    "p", "div", "section", "article", "main", "header", "footer", "aside", "nav", "address",
    "center", "details", "summary", "dialog", "hgroup", "fieldset", "legend", "form", "body", "html",
    "head", "dl", "dt", "dd", "figure", "caption", "noscript", "search", "frameset", "listing",
    "option", "optgroup", "#document"};

// Elements that separate words when flattened into an inline context.
inline constexpr detail::TagSet kFlattenBlocks{
    "p", "div", "section", "article", "main", "header", "footer", "aside", "nav", "address",
    "center", "details", "summary", "dialog", "hgroup", "fieldset", "legend", "form", "body", "html",
    "dl", "dt", "dd", "figure", "figcaption", "caption", "li", "ul", "ol", "menu",
    "dir", "table", "thead", "tbody", "tfoot", "tr", "td", "th", "pre", "blockquote",
    "hr", "h1", "h2", "h3", "h4", "h5", "h6", "listing"};

inline bool matches_boilerplate_pattern(std::string_view value) {
  for (auto p : kBoilerplatePatterns)
    if (detail::icontains_ascii(value, p)) return true;
  return false;
}

inline bool is_boilerplate(const HtmlNode& n) {
  if (n.kind == NodeKind::Comment) return true;
  if (!n.is_element() || n.tag == kRootTag) return false;
  if (in_set(n.tag, kBoilerplateTags)) return true;
  if (const auto* cls = n.attr("class"); cls && matches_boilerplate_pattern(*cls)) return true;
  if (const auto* id = n.attr("id"); id && matches_boilerplate_pattern(*id)) return true;
  return false;
}

inline HtmlNode copy_without(const HtmlNode& n, const auto& drop) {
  HtmlNode out;
  out.kind = n.kind;
  out.tag = n.tag;
  out.attrs = n.attrs;
  out.text = n.text;
  out.children.reserve(n.children.size());
  for (const auto& c : n.children) {
    if (drop(c)) continue;
    out.children.push_back(copy_without(c, drop));
  }
  // Dropping a subtree can leave two text siblings adjacent.
  std::vector<HtmlNode> merged;
  merged.reserve(out.children.size());
  for (auto& c : out.children) {
    if (c.kind == NodeKind::Text && !merged.empty() && merged.back().kind == NodeKind::Text) {
      merged.back().text += c.text;
    } else {
      merged.push_back(std::move(c));
    }
  }
  out.children = std::move(merged);
  return out;
}

// In-place counterpart of copy_without.
inline void remove_where(HtmlNode& n, const auto& drop) {
  std::vector<HtmlNode> kept;
  kept.reserve(n.children.size());
  for (auto& c : n.children) {
    if (drop(c)) continue;
    remove_where(c, drop);
    if (c.kind == NodeKind::Text && !kept.empty() && kept.back().kind == NodeKind::Text) {
      kept.back().text += c.text;
    } else {
      kept.push_back(std::move(c));
    }
  }
  n.children = std::move(kept);
}

struct TextMass {
  std::size_t text = 0;
  std::size_t link = 0;
};

inline std::size_t visible_length(std::string_view s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size();) {
    const char32_t cp = detail::next_code_point(s, i);
    if (!(cp < 0x80 && is_ascii_space(static_cast<char>(cp)))) ++n;
  }
  return n;
}

struct MainContentScorer {
  const HtmlNode* best = nullptr;
  std::size_t best_score = 0;
  std::size_t best_order = 0;
  std::size_t order = 0;

  TextMass visit(const HtmlNode& n, bool in_link) {
    const std::size_t my_order = order++;
    TextMass m;
    if (n.kind == NodeKind::Text) {
      m.text = visible_length(n.text);
      if (in_link) m.link = m.text;
      return m;
    }
    if (!n.is_element()) return m;
    const bool link = in_link || n.tag == "a";
    for (const auto& c : n.children) {
      const TextMass cm = visit(c, link);
      m.text += cm.text;
      m.link += cm.link;
    }
    if (in_set(n.tag, kContentCandidates)) {
      // text * (1 - link / max(text, 1)) == text - link, since link <= text.
      const std::size_t score = m.text - m.link;
      if (score > 0 && (best == nullptr || score > best_score || (score == best_score && my_order < best_order))) {
        best = &n;
        best_score = score;
        best_order = my_order;
      }
    }
    return m;
  }
};

inline const HtmlNode* find_first_element(const HtmlNode& n, std::string_view tag) {
  if (n.is_element(tag)) return &n;
  for (const auto& c : n.children)
    if (const auto* f = find_first_element(c, tag)) return f;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Inline rendering

inline bool entity_like_at(std::string_view s, std::size_t amp) {
  std::size_t k = amp + 1;
  if (k < s.size() && s[k] == '#') ++k;
  const std::size_t b = k;
  while (k < s.size() && (detail::is_ascii_alpha(s[k]) || detail::is_ascii_digit(s[k]))) ++k;
  return k > b && k < s.size() && s[k] == ';';
}

inline bool is_escaped_punct(char c) {
  switch (c) {
    case '\\': case '`': case '*': case '_': case '[': case ']':
    case '<': case '>': case '#': case '~': case '|':
      return true;
    default:
      return false;
  }
}

inline std::string escape_text(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (is_escaped_punct(c) || (c == '&' && entity_like_at(s, i))) out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

inline std::string encode_url(std::string_view url) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(url.size());
  for (char ch : detail::trim_ascii(url)) {
    const auto c = static_cast<unsigned char>(ch);
    if (c <= 0x20 || c == 0x7F || c == '(' || c == ')' || c == '<' || c == '>' || c == '\\') {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0xF]);
    } else {
      out.push_back(ch);
    }
  }
  return out;
}

// Accumulates one paragraph. Hard breaks are kept as '\n' until finish().
class InlineBuffer {
 public:
  explicit InlineBuffer(bool breaks_as_space = false) : breaks_as_space_(breaks_as_space) {}

  void space() {
    if (out_.empty()) {
      leading_space_ = true;
      return;
    }
    if (out_.back() != ' ' && out_.back() != '\n') out_.push_back(' ');
  }

  void text(std::string_view raw) {
    out_.reserve(out_.size() + raw.size());
    std::size_t i = 0;
    while (i < raw.size()) {
      const char c = raw[i];
      if (is_ascii_space(c)) {
        space();
        while (i < raw.size() && is_ascii_space(raw[i])) ++i;
        continue;
      }
      if (is_escaped_punct(c) || c == '&') {
        if (c != '&' || entity_like_at(raw, i)) out_.push_back('\\');
        out_.push_back(c);
        ++i;
        continue;
      }
      std::size_t j = i + 1;
      while (j < raw.size() && !is_ascii_space(raw[j]) && !is_escaped_punct(raw[j]) && raw[j] != '&') ++j;
      out_.append(raw.substr(i, j - i));
      i = j;
    }
  }

  void hard_break() {
    if (breaks_as_space_) {
      space();
      return;
    }
    while (!out_.empty() && out_.back() == ' ') out_.pop_back();
    out_.push_back('\n');
  }

  void syntax(std::string_view s) {
    if (!s.empty() && s.front() == '[' && ends_with_unescaped_bang()) out_.insert(out_.size() - 1, 1, '\\');
    out_.append(s);
  }

  // Wraps pre-rendered content, moving edge whitespace and breaks outside
  // the delimiters.
  void wrap(const InlineBuffer& inner, std::string_view open, std::string_view close) {
    std::string_view body = inner.out_;
    bool lead_break = false, trail_break = false;
    bool lead_space = inner.leading_space_;
    std::size_t b = 0, e = body.size();
    while (b < e && (body[b] == ' ' || body[b] == '\n')) {
      lead_break |= body[b] == '\n';
      lead_space = true;
      ++b;
    }
    bool trail_space = false;
    while (e > b && (body[e - 1] == ' ' || body[e - 1] == '\n')) {
      trail_break |= body[e - 1] == '\n';
      trail_space = true;
      --e;
    }
    if (lead_break) hard_break();
    else if (lead_space) space();
    if (e > b) {
      syntax(open);
      out_.append(body.substr(b, e - b));
      out_.append(close);
    }
    if (trail_break) hard_break();
    else if (trail_space) space();
  }

  // Appends pre-rendered content verbatim.
  void raw(std::string_view s) { out_.append(s); }

  bool empty() const noexcept { return out_.empty(); }
  bool ends_with(char c) const noexcept { return !out_.empty() && out_.back() == c; }
  bool breaks_as_space() const noexcept { return breaks_as_space_; }

  // Final paragraph text: lines trimmed, empty lines dropped, line-start
  // characters that would open a block escaped, breaks as "\\\n".
  std::string finish() const {
    std::string result;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= out_.size(); ++i) {
      if (i != out_.size() && out_[i] != '\n') continue;
      std::string_view line = detail::trim_ascii(std::string_view(out_).substr(start, i - start));
      start = i + 1;
      if (line.empty()) continue;
      if (!result.empty()) result.append("\\\n");
      append_line_escaped(result, line);
    }
    return result;
  }

 private:
  bool ends_with_unescaped_bang() const {
    if (out_.empty() || out_.back() != '!') return false;
    std::size_t slashes = 0;
    for (std::size_t k = out_.size() - 1; k-- > 0 && out_[k] == '\\';) ++slashes;
    return slashes % 2 == 0;
  }

  static void append_line_escaped(std::string& out, std::string_view line) {
    const char c = line.front();
    if (c == '-' || c == '+' || c == '=') {
      out.push_back('\\');
      out.append(line);
      return;
    }
    std::size_t d = 0;
    while (d < line.size() && d < 10 && detail::is_ascii_digit(line[d])) ++d;
    if (d > 0 && d < line.size() && (line[d] == '.' || line[d] == ')')) {
      out.append(line.substr(0, d));
      out.push_back('\\');
      out.append(line.substr(d));
      return;
    }
    out.append(line);
  }

  std::string out_;
  bool breaks_as_space_ = false;
  bool leading_space_ = false;
};

inline void collect_raw_text(const HtmlNode& n, std::string& out) {
  if (n.kind == NodeKind::Text) {
    out += n.text;
    return;
  }
  if (!n.is_element()) return;
  for (const auto& c : n.children) collect_raw_text(c, out);
}

inline std::size_t longest_run(std::string_view s, char ch) {
  std::size_t best = 0, cur = 0;
  for (char c : s) {
    cur = c == ch ? cur + 1 : 0;
    best = std::max(best, cur);
  }
  return best;
}

inline std::string language_of(const HtmlNode& pre) {
  auto from = [](const HtmlNode& n) -> std::string {
    if (const auto* cls = n.attr("class")) {
      for (auto token : detail::split_ascii_whitespace(*cls)) {
        if (token.starts_with("language-") && token.size() > 9 && token.find('`') == std::string_view::npos)
          return std::string(token.substr(9));
      }
    }
    return {};
  };
  if (auto l = from(pre); !l.empty()) return l;
  for (const auto& c : pre.children)
    if (c.is_element("code")) return from(c);
  return {};
}

class Renderer {
 public:
  std::size_t elements = 0;

  void inline_node(const HtmlNode& n, InlineBuffer& buf, bool in_link) {
    if (n.kind == NodeKind::Text) {
      buf.text(n.text);
      return;
    }
    if (!n.is_element()) return;
    ++elements;
    const std::string& t = n.tag;
    if (t == "br") {
      buf.hard_break();
    } else if (t == "strong" || t == "b") {
      emphasis(n, buf, in_link, "**");
    } else if (t == "em" || t == "i") {
      emphasis(n, buf, in_link, "*");
    } else if (t == "del" || t == "s" || t == "strike") {
      emphasis(n, buf, in_link, "~~");
    } else if (t == "code") {
      code_span(n, buf);
    } else if (t == "a") {
      link(n, buf, in_link);
    } else if (t == "img") {
      image(n, buf);
    } else if (t == "script" || t == "style" || t == "iframe") {
      // not content
    } else if (in_set(t, kFlattenBlocks)) {
      buf.space();
      inline_children(n, buf, in_link);
      buf.space();
    } else {
      inline_children(n, buf, in_link);
    }
  }

  void inline_children(const HtmlNode& n, InlineBuffer& buf, bool in_link) {
    for (const auto& c : n.children) inline_node(c, buf, in_link);
  }

  std::string inline_line(const HtmlNode& n) {
    InlineBuffer buf(true);
    inline_children(n, buf, false);
    return buf.finish();
  }

  std::vector<std::string> blocks_of_children(const HtmlNode& n) {
    BlockContext ctx(*this);
    for (const auto& c : n.children) ctx.node(c);
    return ctx.take();
  }

  std::vector<std::string> blocks_of(const HtmlNode& n) {
    BlockContext ctx(*this);
    ctx.node(n);
    return ctx.take();
  }

 private:
  void emphasis(const HtmlNode& n, InlineBuffer& buf, bool in_link, std::string_view delim) {
    // "~~~~" at a line start would open a code fence
    const bool nested_del = delim == "~~" && del_depth_ > 0;
    if (delim == "~~") ++del_depth_;
    InlineBuffer inner(buf.breaks_as_space());
    inline_children(n, inner, in_link);
    if (delim == "~~") --del_depth_;
    buf.wrap(inner, nested_del ? "" : delim, nested_del ? "" : delim);
  }

  int del_depth_ = 0;

  void code_span(const HtmlNode& n, InlineBuffer& buf) {
    std::string raw;
    collect_raw_text(n, raw);
    const std::string content = detail::collapse_whitespace(raw);
    if (content.empty()) {
      if (!raw.empty()) buf.space();
      return;
    }
    if (is_ascii_space(raw.front())) buf.space();
    const std::string fence(longest_run(content, '`') + 1, '`');
    const bool pad = content.front() == '`' || content.back() == '`';
    std::string s = fence;
    if (pad) s.push_back(' ');
    s += content;
    if (pad) s.push_back(' ');
    s += fence;
    // adjacent backtick runs would merge into one fence
    if (buf.ends_with('`')) buf.space();
    buf.syntax(s);
    if (is_ascii_space(raw.back())) buf.space();
  }

  void link(const HtmlNode& n, InlineBuffer& buf, bool in_link) {
    const std::string* href = n.attr("href");
    if (in_link || href == nullptr) {
      inline_children(n, buf, in_link);
      return;
    }
    InlineBuffer inner(buf.breaks_as_space());
    inline_children(n, inner, true);
    buf.wrap(inner, "[", "](" + encode_url(*href) + ")");
  }

  void image(const HtmlNode& n, InlineBuffer& buf) {
    const std::string* src = n.attr("src");
    if (src == nullptr || detail::trim_ascii(*src).empty()) return;
    const std::string* alt = n.attr("alt");
    const std::string alt_text = alt ? escape_text(detail::collapse_whitespace(*alt)) : std::string();
    buf.syntax("![" + alt_text + "](" + encode_url(*src) + ")");
  }

  class BlockContext {
   public:
    explicit BlockContext(Renderer& r) : r_(r) {}

    void node(const HtmlNode& n) {
      if (n.kind == NodeKind::Text) {
        para_.text(n.text);
        return;
      }
      if (!n.is_element()) return;
      const std::string& t = n.tag;
      if (html_detail::is_heading(t)) {
        ++r_.elements;
        flush();
        const std::string content = r_.inline_line(n);
        if (!content.empty()) blocks_.push_back(std::string(static_cast<std::size_t>(t[1] - '0'), '#') + " " + content);
      } else if (t == "figcaption") {
        ++r_.elements;
        flush();
        const std::string content = r_.inline_line(n);
        if (!content.empty()) blocks_.push_back("*" + content + "*");
      } else if (t == "hr") {
        ++r_.elements;
        flush();
        blocks_.push_back("---");
      } else if (t == "pre") {
        ++r_.elements;
        flush();
        code_block(n);
      } else if (t == "blockquote") {
        ++r_.elements;
        flush();
        blockquote(n);
      } else if (t == "ul" || t == "menu" || t == "dir") {
        ++r_.elements;
        flush();
        list(n, false);
      } else if (t == "ol") {
        ++r_.elements;
        flush();
        list(n, true);
      } else if (t == "li") {
        ++r_.elements;
        flush();
        if (auto item = list_item_body(n); !item.empty()) blocks_.push_back(prefix_item(item, "- "));
      } else if (t == "table") {
        ++r_.elements;
        flush();
        table(n);
      } else if (t == "script" || t == "style" || t == "iframe" || t == "template") {
        ++r_.elements;
      } else if (in_set(t, kBlockContainers)) {
        ++r_.elements;
        flush();
        for (const auto& c : n.children) node(c);
        flush();
      } else if (t == "br" || t == "strong" || t == "b" || t == "em" || t == "i" || t == "del" || t == "s" ||
                 t == "strike" || t == "code" || t == "a" || t == "img") {
        r_.inline_node(n, para_, false);
      } else {
        ++r_.elements;
        for (const auto& c : n.children) node(c);
      }
    }

    std::vector<std::string> take() {
      flush();
      return std::move(blocks_);
    }

   private:
    void flush() {
      std::string p = para_.finish();
      if (!p.empty()) blocks_.push_back(std::move(p));
      para_ = InlineBuffer();
    }

    void code_block(const HtmlNode& pre) {
      std::string raw;
      collect_raw_text(pre, raw);
      if (!raw.empty() && raw.front() == '\n') raw.erase(0, 1);
      std::vector<std::string> lines;
      bool prev_blank = true;
      for (auto& line : detail::split_lines(raw)) {
        std::string trimmed(detail::rtrim_ascii(line));
        const bool blank = trimmed.empty();
        if (blank && prev_blank) continue;
        lines.push_back(std::move(trimmed));
        prev_blank = blank;
      }
      while (!lines.empty() && lines.back().empty()) lines.pop_back();
      if (lines.empty()) return;
      std::string content;
      for (const auto& l : lines) {
        if (!content.empty()) content.push_back('\n');
        content += l;
      }
      const std::string fence(std::max<std::size_t>(3, longest_run(content, '`') + 1), '`');
      blocks_.push_back(fence + language_of(pre) + "\n" + content + "\n" + fence);
    }

    void blockquote(const HtmlNode& n) {
      const auto inner = r_.blocks_of_children(n);
      if (inner.empty()) return;
      std::string joined;
      for (const auto& b : inner) {
        if (!joined.empty()) joined += "\n\n";
        joined += b;
      }
      std::string out;
      for (const auto& line : detail::split_lines(joined)) {
        if (!out.empty()) out.push_back('\n');
        out += line.empty() ? std::string(">") : "> " + line;
      }
      blocks_.push_back(std::move(out));
    }

    std::string list_item_body(const HtmlNode& li) {
      const auto inner = r_.blocks_of_children(li);
      return join_item_blocks(inner);
    }

    static bool is_list_block(std::string_view b) {
      if (b.starts_with("- ")) return true;
      std::size_t d = 0;
      while (d < b.size() && detail::is_ascii_digit(b[d])) ++d;
      return d > 0 && b.substr(d, 2) == ". ";
    }

    static std::string join_item_blocks(const std::vector<std::string>& blocks) {
      std::string out;
      for (const auto& b : blocks) {
        if (!out.empty()) out += is_list_block(b) ? "\n" : "\n\n";
        out += b;
      }
      return out;
    }

    static std::string prefix_item(std::string_view body, std::string_view marker) {
      std::string out;
      bool first = true;
      for (const auto& line : detail::split_lines(body)) {
        if (!first) out.push_back('\n');
        if (first) out += std::string(marker) + line;
        else if (!line.empty()) out += "  " + line;
        first = false;
      }
      return out;
    }

    void list(const HtmlNode& n, bool ordered) {
      const std::string_view marker = ordered ? "1. " : "- ";
      std::vector<std::string> items;
      std::optional<BlockContext> loose;
      auto flush_loose = [&]() {
        if (!loose) return;
        auto blocks = loose->take();
        if (!blocks.empty()) items.push_back(prefix_item(join_item_blocks(blocks), marker));
        loose.reset();
      };
      for (const auto& c : n.children) {
        if (c.is_element("li")) {
          flush_loose();
          ++r_.elements;
          if (auto body = list_item_body(c); !body.empty()) items.push_back(prefix_item(body, marker));
        } else if ((c.is_element("ul") || c.is_element("ol")) && !items.empty() && !loose) {
          // Nested list written as a sibling of <li>: attach to the previous item.
          for (const auto& b : r_.blocks_of(c)) items.back() += "\n" + prefix_item(b, "  ");
        } else {
          if (!loose) loose.emplace(r_);
          loose->node(c);
        }
      }
      flush_loose();
      if (items.empty()) return;
      std::string out;
      for (const auto& it : items) {
        if (!out.empty()) out.push_back('\n');
        out += it;
      }
      blocks_.push_back(std::move(out));
    }

    struct Cell {
      std::string text;
      std::size_t colspan = 1;
      std::size_t rowspan = 1;
    };
    struct Row {
      std::vector<Cell> cells;
      bool head = false;
    };

    static std::size_t span_attr(const HtmlNode& n, std::string_view name) {
      const std::string* v = n.attr(name);
      if (!v) return 1;
      std::size_t x = 0;
      for (char c : detail::trim_ascii(*v)) {
        if (!detail::is_ascii_digit(c)) break;
        x = x * 10 + static_cast<std::size_t>(c - '0');
        if (x > 1000) break;
      }
      return std::clamp<std::size_t>(x, 1, 100);
    }

    void collect_rows(const HtmlNode& n, bool head, std::vector<Row>& rows, BlockContext& stray) {
      for (const auto& c : n.children) {
        if (c.is_element("thead") || c.is_element("tbody") || c.is_element("tfoot")) {
          ++r_.elements;
          collect_rows(c, c.tag == "thead", rows, stray);
        } else if (c.is_element("tr")) {
          ++r_.elements;
          Row row;
          row.head = head;
          for (const auto& cell : c.children) {
            if (cell.is_element("td") || cell.is_element("th")) {
              ++r_.elements;
              row.cells.push_back({r_.inline_line(cell), span_attr(cell, "colspan"), span_attr(cell, "rowspan")});
            } else {
              stray.node(cell);
            }
          }
          rows.push_back(std::move(row));
        } else if (c.is_element("caption")) {
          ++r_.elements;
          for (const auto& x : c.children) stray.node(x);
        } else if (c.is_element("colgroup") || c.is_element("col")) {
          ++r_.elements;
        } else {
          stray.node(c);
        }
      }
    }

    void table(const HtmlNode& n) {
      std::vector<Row> rows;
      BlockContext stray(r_);
      collect_rows(n, false, rows, stray);
      for (auto& b : stray.take()) blocks_.push_back(std::move(b));
      if (rows.empty()) return;

      // Spanned cells are repeated across the columns and rows they cover.
      std::vector<std::vector<std::string>> grid;
      std::vector<std::pair<std::size_t, std::string>> carry;
      std::size_t header_index = 0;
      bool found_head = false;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].head && !found_head) {
          header_index = r;
          found_head = true;
        }
        std::vector<std::string> out;
        std::size_t col = 0;
        auto drain_carry = [&]() {
          while (col < carry.size() && carry[col].first > 0) {
            out.push_back(carry[col].second);
            --carry[col].first;
            ++col;
          }
        };
        for (const auto& cell : rows[r].cells) {
          drain_carry();
          for (std::size_t k = 0; k < cell.colspan; ++k) {
            if (carry.size() <= col) carry.resize(col + 1);
            if (cell.rowspan > 1) carry[col] = {cell.rowspan - 1, cell.text};
            out.push_back(cell.text);
            ++col;
          }
        }
        drain_carry();
        grid.push_back(std::move(out));
      }
      if (header_index != 0) std::rotate(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(header_index),
                                         grid.begin() + static_cast<std::ptrdiff_t>(header_index) + 1);
      std::size_t cols = 1;
      for (const auto& r : grid) cols = std::max(cols, r.size());
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s = "|";
        for (std::size_t c = 0; c < cols; ++c) {
          s += " ";
          s += c < cells.size() ? cells[c] : std::string();
          s += " |";
        }
        return s;
      };
      std::string out = line(grid.front());
      out += "\n|";
      for (std::size_t c = 0; c < cols; ++c) out += " --- |";
      for (std::size_t r = 1; r < grid.size(); ++r) out += "\n" + line(grid[r]);
      blocks_.push_back(std::move(out));
    }

    Renderer& r_;
    InlineBuffer para_;
    std::vector<std::string> blocks_;
  };
};

}  // namespace md_detail

// Trailing whitespace trimmed on every line, runs of blank lines collapsed to
// one, leading blank lines dropped, exactly one final newline (or empty).
inline std::string normalize_markdown_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 1);
  bool pending_blank = false;
  for (const auto& raw : detail::split_lines(text)) {
    const std::string_view line = detail::rtrim_ascii(raw);
    if (line.empty()) {
      pending_blank = !out.empty();
      continue;
    }
    if (pending_blank) out.push_back('\n');
    pending_blank = false;
    out.append(line);
    out.push_back('\n');
  }
  return out;
}

// Copy of `root` without navigation, footers, asides, forms, iframes,
// scripts, styles, comments, document head, and any element whose class or
// id contains a boilerplate pattern.
inline HtmlNode strip_boilerplate(const HtmlNode& root) {
  return md_detail::copy_without(root, [](const HtmlNode& n) { return md_detail::is_boilerplate(n); });
}

// First <main>, else first <article>, else the div/section/td/center with
// the highest text_length * (1 - link_text_length / max(text_length, 1)),
// earliest on ties. Falls back to `root` when no candidate scores above zero
// or the best one holds no more than half of the page's non-link text. The
// result borrows from `root`.
inline const HtmlNode& score_main_content(const HtmlNode& root) {
  if (const auto* m = md_detail::find_first_element(root, "main")) return *m;
  if (const auto* a = md_detail::find_first_element(root, "article")) return *a;
  md_detail::MainContentScorer scorer;
  const auto page = scorer.visit(root, false);
  // The winner must carry more than half of the page's non-link text.
  if (scorer.best == nullptr || scorer.best_score * 2 <= page.text - page.link) return root;
  return *scorer.best;
}

// The tree that convert() renders: boilerplate removed, scope applied,
// excluded subtrees dropped. Children of the returned synthetic root are
// the scope nodes in document order.
inline HtmlNode resolve_scope(HtmlNode&& root, const ExtractionInstruction& instr) {
  if (instr.mode == ExtractionMode::Scoped && instr.include.empty())
    throw InstructionError("scoped extraction requires at least one include selector");
  HtmlNode stripped = std::move(root);
  md_detail::remove_where(stripped, [](const HtmlNode& n) { return md_detail::is_boilerplate(n); });

  std::unordered_set<const HtmlNode*> excluded;
  for (const auto& sel : instr.exclude)
    for (const auto* n : select(stripped, sel)) excluded.insert(n);
  auto drop = [&](const HtmlNode& n) { return excluded.contains(&n); };
  // `stripped` is ours, so with nothing excluded a subtree can be moved out.
  auto take = [&](const HtmlNode& n) {
    return excluded.empty() ? std::move(const_cast<HtmlNode&>(n)) : md_detail::copy_without(n, drop);
  };

  HtmlNode scope;
  scope.tag = std::string(kRootTag);
  if (instr.mode == ExtractionMode::MainContent) {
    const HtmlNode& main = score_main_content(stripped);
    if (&main == &stripped) return take(stripped);
    if (!drop(main)) scope.children.push_back(take(main));
    return scope;
  }

  std::unordered_set<const HtmlNode*> included;
  for (const auto& sel : instr.include)
    for (const auto* n : select(stripped, sel)) included.insert(n);
  if (included.empty()) throw ScopeEmpty("include selectors matched no elements");

  // Outermost matches only, in document order.
  auto gather = [&](auto&& self, const HtmlNode& n) -> void {
    if (included.contains(&n)) {
      if (!drop(n)) scope.children.push_back(take(n));
      return;
    }
    for (const auto& c : n.children) self(self, c);
  };
  gather(gather, stripped);
  return scope;
}

inline HtmlNode resolve_scope(const HtmlNode& root, const ExtractionInstruction& instr) {
  return resolve_scope(strip_boilerplate(root), instr);
}

// Renders an already-scoped tree.
inline MarkdownDoc render_markdown(const HtmlNode& scope, std::string source_id = {}) {
  md_detail::Renderer r;
  const auto blocks = r.blocks_of_children(scope);
  std::string body;
  for (const auto& b : blocks) {
    if (!body.empty()) body += "\n\n";
    body += b;
  }
  MarkdownDoc doc;
  doc.body = normalize_markdown_whitespace(body);
  doc.source_id = std::move(source_id);
  doc.stats.element_count = r.elements;
  doc.stats.char_count = detail::code_point_count(doc.body);
  return doc;
}

inline MarkdownDoc convert(const HtmlNode& root, const ExtractionInstruction& instr = {}, std::string source_id = {}) {
  return render_markdown(resolve_scope(root, instr), std::move(source_id));
}

inline MarkdownDoc convert(HtmlNode&& root, const ExtractionInstruction& instr = {}, std::string source_id = {}) {
  return render_markdown(resolve_scope(std::move(root), instr), std::move(source_id));
}

}  // namespace readerkit
