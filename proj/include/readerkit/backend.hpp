#pragma once

// Generation backends for the synthesis pipeline.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include <httplib.h>

#include "hash.hpp"
#include "json_extract.hpp"
#include "markdown.hpp"
#include "metrics.hpp"

namespace readerkit {

enum class Task : std::uint8_t { Markdown, Json };

inline std::string_view to_string(Task t) { return t == Task::Markdown ? "markdown" : "json"; }

inline Task parse_task(std::string_view s) {
  if (s == "markdown") return Task::Markdown;
  if (s == "json") return Task::Json;
  throw std::invalid_argument("unknown task '" + std::string(s) + "' (expected markdown or json)");
}

enum class Stage : std::uint8_t { Draft, Refine, Critique };

inline std::string_view to_string(Stage s) {
  switch (s) {
    case Stage::Draft: return "draft";
    case Stage::Refine: return "refine";
    case Stage::Critique: return "critique";
  }
  return "?";
}

struct GenerationParams {
  std::uint64_t max_output_tokens = 4096;
  double temperature = 0.0;
  std::optional<std::int64_t> seed;
};

// What the pipeline knows about a call. Remote backends only see the
// prompts; in-process backends may use this instead of parsing them.
struct CallContext {
  Stage stage = Stage::Draft;
  Task task = Task::Markdown;
  std::string_view doc_id;
  std::string_view html;
  std::string_view candidate;  // normalized draft (refine) or refined output (critique)
  const JsonSchemaSpec* schema = nullptr;
  unsigned attempt = 1;
};

// A failed call that may succeed when retried.
class BackendError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Too many consecutive documents failed; the run is aborted.
class BackendUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BackendConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GenerationBackend {
 public:
  virtual ~GenerationBackend() = default;
  virtual std::string name() const = 0;
  virtual bool deterministic() const = 0;
  virtual std::string generate(const std::string& system_prompt, const std::string& user_prompt,
                               const GenerationParams& params, const CallContext& ctx) = 0;
};

// ---- retry -----------------------------------------------------------------

struct RetryPolicy {
  unsigned attempts = 3;
  std::vector<std::chrono::milliseconds> backoff = {std::chrono::seconds(1), std::chrono::seconds(4),
                                                    std::chrono::seconds(16)};
  std::function<void(std::chrono::milliseconds)> sleep = [](std::chrono::milliseconds d) {
    std::this_thread::sleep_for(d);
  };

  static RetryPolicy no_wait(unsigned attempts = 3) {
    RetryPolicy p;
    p.attempts = attempts;
    p.sleep = [](std::chrono::milliseconds) {};
    return p;
  }
};

class RetriesExhausted : public std::runtime_error {
 public:
  RetriesExhausted(const std::string& what, unsigned retries) : std::runtime_error(what), retries_(retries) {}
  unsigned retries() const noexcept { return retries_; }

 private:
  unsigned retries_;
};

// Calls the backend until it returns non-blank text or the attempts run out.
// `retries` receives the number of failed attempts before the result.
inline std::string generate_with_retry(GenerationBackend& backend, const std::string& system_prompt,
                                       const std::string& user_prompt, const GenerationParams& params,
                                       CallContext ctx, const RetryPolicy& policy, unsigned& retries) {
  retries = 0;
  std::string last_error;
  const unsigned attempts = std::max(1u, policy.attempts);
  for (unsigned a = 1; a <= attempts; ++a) {
    ctx.attempt = a;
    try {
      std::string out = backend.generate(system_prompt, user_prompt, params, ctx);
      if (!detail::trim_ascii(out).empty()) return out;
      last_error = "empty output";
    } catch (const BackendError& e) {
      last_error = e.what();
    }
    if (a == attempts) break;
    ++retries;
    if (!policy.backoff.empty() && policy.sleep)
      policy.sleep(policy.backoff[std::min<std::size_t>(a - 1, policy.backoff.size() - 1)]);
  }
  throw RetriesExhausted(last_error, retries);
}

// ---- deterministic mock ------------------------------------------------------

// In-process stand-in for a model. Drafts come from the library's own
// converter (or extraction template) with deterministic per-document noise,
// refinement echoes the normalized draft, and critique compares the refined
// output with the reference conversion.
class MockBackend : public GenerationBackend {
 public:
  struct JsonSetup {
    JsonSchemaSpec schema;
    std::optional<ExtractionTemplate> extraction;
  };

  explicit MockBackend(std::string name = "mock", std::uint32_t variant = 0, std::optional<JsonSetup> json = {})
      : name_(std::move(name)), variant_(variant), json_(std::move(json)) {}

  std::string name() const override { return name_; }
  bool deterministic() const override { return true; }

  std::string generate(const std::string&, const std::string&, const GenerationParams&,
                       const CallContext& ctx) override {
    switch (ctx.stage) {
      case Stage::Draft: return ctx.task == Task::Markdown ? draft_markdown(ctx) : draft_json(ctx);
      case Stage::Refine: return std::string(ctx.candidate);
      case Stage::Critique: return ctx.task == Task::Markdown ? critique_markdown(ctx) : critique_json(ctx);
    }
    throw BackendError("unknown stage");
  }

  // Noise kind for a document: 0-2 clean, 3-4 repeated first block,
  // 5 ragged whitespace, 6 truncated, 7 shuffled blocks.
  unsigned noise_kind(std::string_view doc_id) const {
    const std::string h = sha256_hex(std::to_string(variant_) + ":" + std::string(doc_id));
    return static_cast<unsigned>(std::stoul(h.substr(0, 2), nullptr, 16) % 8);
  }

  static std::string reference_markdown(std::string_view html) { return convert(parse_html(html)).body; }

  std::optional<Json> reference_json(std::string_view html) const {
    if (!json_ || !json_->extraction) return std::nullopt;
    try {
      return extract_json(parse_html(html), json_->schema, *json_->extraction);
    } catch (const ExtractionError&) {
      return std::nullopt;
    }
  }

 private:
  static std::vector<std::string> blocks_of(std::string_view md) {
    std::vector<std::string> blocks;
    std::string cur;
    for (const auto& line : detail::split_lines(md)) {
      if (line.empty()) {
        if (!cur.empty()) blocks.push_back(std::move(cur));
        cur.clear();
        continue;
      }
      if (!cur.empty()) cur += '\n';
      cur += line;
    }
    if (!cur.empty()) blocks.push_back(std::move(cur));
    return blocks;
  }

  static std::string join_blocks(const std::vector<std::string>& blocks) {
    std::string out;
    for (const auto& b : blocks) {
      if (!out.empty()) out += "\n\n";
      out += b;
    }
    return out + "\n";
  }

  std::string draft_markdown(const CallContext& ctx) const {
    std::string md = reference_markdown(ctx.html);
    auto blocks = blocks_of(md);
    if (blocks.empty()) return "(no content)\n";
    switch (noise_kind(ctx.doc_id)) {
      case 3:
      case 4:
        blocks.insert(blocks.begin(), {blocks.front(), blocks.front()});
        return join_blocks(blocks);
      case 5: {
        std::string ragged;
        for (const auto& line : detail::split_lines(md)) ragged += line + "   \n\n\n";
        return "\n\n" + ragged;
      }
      case 6:
        blocks.resize((blocks.size() + 2) / 3);
        return join_blocks(blocks);
      case 7:
        std::reverse(blocks.begin(), blocks.end());
        return join_blocks(blocks);
      default: return md;
    }
  }

  std::string draft_json(const CallContext& ctx) const {
    const Json value = reference_json(ctx.html).value_or(Json::object());
    switch (noise_kind(ctx.doc_id)) {
      case 3:
      case 4: return "```json\n" + value.dump(2) + "\n```";
      case 5: return value.dump(4);
      case 6: {
        const std::string s = value.dump();
        return s.substr(0, s.size() / 2) + " ";
      }
      default: return value.dump();
    }
  }

  static std::string critique_markdown(const CallContext& ctx) {
    const std::string reference = reference_markdown(ctx.html);
    const MetricReport m = markdown_metrics(ctx.candidate, reference);
    char buf[160];
    std::snprintf(buf, sizeof buf, "rouge_l=%.4f levenshtein=%.4f against the reference conversion", m.rouge_l,
                  m.levenshtein_norm);
    return std::string(m.rouge_l >= 0.9 ? "PASS" : "FAIL") + "\n" + buf;
  }

  std::string critique_json(const CallContext& ctx) const {
    const Json value = Json::parse(ctx.candidate, nullptr, false);
    if (value.is_discarded()) return "FAIL\noutput is not valid JSON";
    if (ctx.schema) {
      const ValidationReport r = validate(value, *ctx.schema);
      if (!r.ok) return "FAIL\nschema violation at '" + r.violations.front().path + "': " + r.violations.front().detail;
    }
    if (const auto ref = reference_json(ctx.html)) {
      const JsonNodeSet got = to_node_set(value), want = to_node_set(*ref);
      if (got.size() != want.size() || node_set_overlap(got, want) != got.size())
        return "FAIL\noutput differs from the reference extraction";
    }
    return "PASS\noutput parses and matches the schema";
  }

  std::string name_;
  std::uint32_t variant_;
  std::optional<JsonSetup> json_;
};

// ---- scripted fault injection ----------------------------------------------

// Wraps another backend. Per (stage, doc_id) it can fail a number of times
// before answering and can replay canned responses; a rule function can
// override any call.
class ScriptedBackend : public GenerationBackend {
 public:
  using Rule = std::function<std::optional<std::string>(const CallContext&)>;

  explicit ScriptedBackend(std::shared_ptr<GenerationBackend> inner, std::string name = {})
      : inner_(std::move(inner)), name_(name.empty() ? inner_->name() : std::move(name)) {}

  std::string name() const override { return name_; }
  bool deterministic() const override { return inner_->deterministic(); }

  void fail(Stage stage, std::string doc_id, unsigned times) {
    std::lock_guard lock(mu_);
    scripts_[{stage, std::move(doc_id)}].failures = times;
  }
  void respond(Stage stage, std::string doc_id, std::vector<std::string> responses) {
    std::lock_guard lock(mu_);
    auto& q = scripts_[{stage, std::move(doc_id)}].responses;
    q.insert(q.end(), responses.begin(), responses.end());
  }
  void fail_always(Stage stage) {
    std::lock_guard lock(mu_);
    always_fail_[static_cast<int>(stage)] = true;
  }
  void set_rule(Rule rule) {
    std::lock_guard lock(mu_);
    rule_ = std::move(rule);
  }
  std::size_t calls() const {
    std::lock_guard lock(mu_);
    return calls_;
  }

  std::string generate(const std::string& system_prompt, const std::string& user_prompt, const GenerationParams& params,
                       const CallContext& ctx) override {
    Rule rule;
    {
      std::lock_guard lock(mu_);
      ++calls_;
      if (always_fail_[static_cast<int>(ctx.stage)]) throw BackendError("scripted outage");
      const auto it = scripts_.find({ctx.stage, std::string(ctx.doc_id)});
      if (it != scripts_.end()) {
        if (it->second.failures > 0) {
          --it->second.failures;
          throw BackendError("scripted failure");
        }
        if (!it->second.responses.empty()) {
          std::string out = std::move(it->second.responses.front());
          it->second.responses.pop_front();
          return out;
        }
      }
      rule = rule_;
    }
    if (rule)
      if (auto out = rule(ctx)) return *out;
    return inner_->generate(system_prompt, user_prompt, params, ctx);
  }

 private:
  struct Script {
    unsigned failures = 0;
    std::deque<std::string> responses;
  };

  std::shared_ptr<GenerationBackend> inner_;
  std::string name_;
  mutable std::mutex mu_;
  std::map<std::pair<Stage, std::string>, Script> scripts_;
  bool always_fail_[3] = {false, false, false};
  Rule rule_;
  std::size_t calls_ = 0;
};

// ---- HTTP ------------------------------------------------------------------

struct HttpBackendConfig {
  std::string url;                                // e.g. https://host/v1/chat/completions
  std::string model;
  std::string token_env = "READERKIT_API_TOKEN";  // bearer token variable
  std::string name;                               // defaults to "http:<model>"
  std::chrono::seconds timeout{120};
};

struct ParsedUrl {
  std::string scheme_host_port;
  std::string path;
};

inline ParsedUrl parse_http_url(std::string_view url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos) throw BackendConfigError("backend url lacks a scheme: " + std::string(url));
  const std::string scheme = detail::ascii_lowercase(url.substr(0, scheme_end));
  if (scheme != "http" && scheme != "https") throw BackendConfigError("backend url must be http or https");
  const auto host_begin = scheme_end + 3;
  const auto path_begin = url.find('/', host_begin);
  ParsedUrl p;
  p.scheme_host_port = scheme + "://" + std::string(url.substr(host_begin, path_begin - host_begin));
  p.path = path_begin == std::string_view::npos ? "/" : std::string(url.substr(path_begin));
  if (host_begin == url.size() || url[host_begin] == '/') throw BackendConfigError("backend url lacks a host");
  return p;
}

// Chat-completion style endpoint:
//   POST {model, messages: [{role, content}...], max_tokens, temperature, seed}
// answered with {choices: [{message: {content}}]}.
class HttpBackend : public GenerationBackend {
 public:
  explicit HttpBackend(HttpBackendConfig cfg) : cfg_(std::move(cfg)), url_(parse_http_url(cfg_.url)) {
    const char* token = std::getenv(cfg_.token_env.c_str());
    if (token == nullptr || *token == '\0')
      throw BackendConfigError("environment variable " + cfg_.token_env + " with the backend token is not set");
    token_ = token;
    if (cfg_.name.empty()) cfg_.name = "http:" + cfg_.model;
  }

  std::string name() const override { return cfg_.name; }
  bool deterministic() const override { return false; }

  static Json request_body(const std::string& model, const std::string& system_prompt, const std::string& user_prompt,
                           const GenerationParams& params) {
    Json body{{"model", model},
              {"messages", Json::array({Json{{"role", "system"}, {"content", system_prompt}},
                                        Json{{"role", "user"}, {"content", user_prompt}}})},
              {"max_tokens", params.max_output_tokens},
              {"temperature", params.temperature}};
    if (params.seed) body["seed"] = *params.seed;
    return body;
  }

  static std::string response_text(std::string_view body) {
    const Json j = Json::parse(body, nullptr, false);
    if (j.is_discarded()) throw BackendError("backend response is not JSON");
    const Json* content = nullptr;
    if (j.is_object() && j.contains("choices") && j["choices"].is_array() && !j["choices"].empty()) {
      const Json& choice = j["choices"][0];
      if (choice.is_object() && choice.contains("message") && choice["message"].is_object() &&
          choice["message"].contains("content"))
        content = &choice["message"]["content"];
    }
    if (content == nullptr || !content->is_string()) throw BackendError("backend response lacks choices[0].message.content");
    return content->get<std::string>();
  }

  std::string generate(const std::string& system_prompt, const std::string& user_prompt, const GenerationParams& params,
                       const CallContext&) override {
    httplib::Client client(url_.scheme_host_port);
    const auto secs = static_cast<time_t>(cfg_.timeout.count());
    client.set_connection_timeout(secs, 0);
    client.set_read_timeout(secs, 0);
    client.set_write_timeout(secs, 0);
    client.set_bearer_token_auth(token_);
    const std::string body = request_body(cfg_.model, system_prompt, user_prompt, params).dump();
    const auto res = client.Post(url_.path, body, "application/json");
    if (!res) throw BackendError("backend request failed: " + httplib::to_string(res.error()));
    if (res->status < 200 || res->status >= 300)
      throw BackendError("backend returned HTTP " + std::to_string(res->status));
    return response_text(res->body);
  }

 private:
  HttpBackendConfig cfg_;
  ParsedUrl url_;
  std::string token_;
};

}  // namespace readerkit
