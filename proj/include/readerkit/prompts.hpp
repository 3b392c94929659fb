#pragma once

// Prompt templates: a [system] section and a [user] section, with {{name}}
// placeholders filled at render time.

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "backend.hpp"
#include "hash.hpp"
#include "json_extract.hpp"

namespace readerkit {

// templates/draft_markdown.txt
inline constexpr std::string_view kDraftMarkdownTemplate = R"tmpl([system]
You convert HTML documents into clean GitHub-flavored Markdown. Keep the main content only: drop navigation menus, advertisements, cookie notices, footers and other boilerplate. Preserve headings, lists, tables, links, images, emphasis and code blocks.
[user]
{{instruction}}

HTML document:
{{html}}

Reply with the Markdown only.
)tmpl";

// templates/draft_json.txt
inline constexpr std::string_view kDraftJsonTemplate = R"tmpl([system]
You extract structured data from HTML documents. Your reply must be a single JSON value that conforms to the given schema: use exactly the declared fields and types, include every required field, and omit fields the page does not provide.
[user]
{{instruction}}

JSON schema:
{{schema}}

HTML document:
{{html}}

Reply with the JSON only.
)tmpl";

// templates/refine.txt
inline constexpr std::string_view kRefineTemplate = R"tmpl([system]
You review a draft produced from an HTML document. Fix factual errors against the document, remove redundancy and noise, and enforce a consistent structure. Do not add content that is not in the document.
[user]
Task ({{task}}): {{instruction}}
{{schema}}

HTML document:
{{html}}

Draft:
{{draft}}

Reply with the corrected output only.
)tmpl";

// templates/critique.txt
inline constexpr std::string_view kCritiqueTemplate = R"tmpl([system]
You judge whether an output faithfully fulfils an instruction for an HTML document. The first line of your reply must be exactly PASS or FAIL. Explain your judgment on the following lines.
[user]
Task ({{task}}): {{instruction}}
{{schema}}

HTML document:
{{html}}

Output under review:
{{output}}
)tmpl";

inline const std::set<std::string>& known_placeholders() {
  static const std::set<std::string> names = {"html", "instruction", "schema", "task", "draft", "output", "doc_id"};
  return names;
}

inline std::set<std::string> required_placeholders(Stage stage, Task task) {
  switch (stage) {
    case Stage::Draft:
      if (task == Task::Json) return {"html", "schema"};
      return {"html", "instruction"};
    case Stage::Refine: return {"html", "draft"};
    case Stage::Critique: return {"html", "output"};
  }
  return {};
}

struct RenderedPrompt {
  std::string system;
  std::string user;
};

class PromptTemplate {
 public:
  // Throws TemplateError on a missing section, an unknown placeholder or a
  // missing required one.
  static PromptTemplate parse(std::string_view text, Stage stage, Task task) {
    PromptTemplate t;
    t.source_ = std::string(text);
    std::string* section = nullptr;
    bool saw_system = false, saw_user = false;
    for (const auto& raw : detail::split_lines(text)) {
      const std::string_view line = detail::rtrim_ascii(raw);
      if (line == "[system]" || line == "[user]") {
        const bool sys = line == "[system]";
        if ((sys && saw_system) || (!sys && saw_user)) throw TemplateError("duplicate section " + std::string(line));
        (sys ? saw_system : saw_user) = true;
        section = sys ? &t.system_ : &t.user_;
        continue;
      }
      if (section == nullptr) {
        if (detail::trim_ascii(line).empty()) continue;
        throw TemplateError("prompt template text before the first [system] or [user] section");
      }
      section->append(raw);
      section->push_back('\n');
    }
    if (!saw_system || !saw_user) throw TemplateError("prompt template needs both [system] and [user] sections");
    for (std::string* s : {&t.system_, &t.user_}) {
      while (!s->empty() && (s->back() == '\n' || s->back() == ' ')) s->pop_back();
    }

    std::set<std::string> used;
    for (const std::string* s : {&t.system_, &t.user_}) {
      for (const auto& name : placeholders_in(*s)) {
        if (!known_placeholders().count(name)) throw TemplateError("unknown placeholder {{" + name + "}}");
        used.insert(name);
      }
    }
    for (const auto& need : required_placeholders(stage, task))
      if (!used.count(need))
        throw TemplateError(std::string(to_string(stage)) + " template lacks placeholder {{" + need + "}}");
    return t;
  }

  static PromptTemplate builtin(Stage stage, Task task) {
    switch (stage) {
      case Stage::Draft: return parse(task == Task::Json ? kDraftJsonTemplate : kDraftMarkdownTemplate, stage, task);
      case Stage::Refine: return parse(kRefineTemplate, stage, task);
      case Stage::Critique: return parse(kCritiqueTemplate, stage, task);
    }
    throw TemplateError("unknown stage");
  }

  // Single pass: substituted values are never expanded again.
  RenderedPrompt render(const std::map<std::string, std::string>& values) const {
    return {substitute(system_, values), substitute(user_, values)};
  }

  const std::string& source() const { return source_; }
  std::string sha256() const { return sha256_hex(source_); }

 private:
  static std::vector<std::string> placeholders_in(std::string_view s) {
    std::vector<std::string> names;
    for (std::size_t i = s.find("{{"); i != std::string_view::npos; i = s.find("{{", i + 2)) {
      const auto end = s.find("}}", i + 2);
      if (end == std::string_view::npos) throw TemplateError("unterminated placeholder");
      names.emplace_back(s.substr(i + 2, end - i - 2));
    }
    return names;
  }

  static std::string substitute(std::string_view s, const std::map<std::string, std::string>& values) {
    std::string out;
    std::size_t pos = 0;
    for (std::size_t i = s.find("{{"); i != std::string_view::npos; i = s.find("{{", pos)) {
      const auto end = s.find("}}", i + 2);
      out.append(s.substr(pos, i - pos));
      const auto it = values.find(std::string(s.substr(i + 2, end - i - 2)));
      if (it != values.end()) out.append(it->second);
      pos = end + 2;
    }
    out.append(s.substr(pos));
    return out;
  }

  std::string system_;
  std::string user_;
  std::string source_;
};

}  // namespace readerkit
