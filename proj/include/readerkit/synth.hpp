#pragma once

// Draft, refine and critique over a corpus store, then assembly of the
// SFT-filtered, critique and preference datasets.
//
// Layout of a run (one directory per round):
//   <out>/round-<n>/run.json                  settings fingerprint for --resume
//   <out>/round-<n>/logs/{draft,refine,critique}.jsonl   append-only stage logs
//   <out>/round-<n>/{sft_filtered,critique,dpo}.jsonl    datasets
//   <out>/round-<n>/manifest.json

#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <unordered_set>
#include <variant>
#include <vector>

#include "backend.hpp"
#include "corpus.hpp"
#include "prompts.hpp"
#include "random.hpp"

namespace readerkit {

class PipelineInterrupted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResumeMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kDefaultMarkdownInstruction =
    "Convert the main content of the HTML document to GitHub-flavored Markdown.";
inline constexpr std::string_view kDefaultJsonInstruction =
    "Extract the data described by the JSON schema from the HTML document.";
inline constexpr std::string_view kUnparseableCritique = "unparseable critique";
inline constexpr std::string_view kRefinementUnparseable = "RefinementUnparseable";

// ---- records ---------------------------------------------------------------

struct DraftRecord {
  std::string doc_id;
  std::string instruction;
  Task task = Task::Markdown;
  std::string draft_output;
  std::string backend_name;
  std::string timestamp;
  unsigned retries = 0;

  Json to_json() const {
    return Json{{"kind", "draft"},          {"doc_id", doc_id},     {"instruction", instruction},
                {"task", to_string(task)},  {"draft_output", draft_output}, {"backend_name", backend_name},
                {"timestamp", timestamp},   {"retries", retries}};
  }
  static DraftRecord from_json(const Json& j) {
    return {j.at("doc_id").get<std::string>(),       j.at("instruction").get<std::string>(),
            parse_task(j.at("task").get<std::string>()), j.at("draft_output").get<std::string>(),
            j.at("backend_name").get<std::string>(), j.at("timestamp").get<std::string>(),
            j.at("retries").get<unsigned>()};
  }
};

struct RefineRecord {
  std::string doc_id;
  std::string refined_output;
  bool changed = false;
  std::string backend_name;
  unsigned retries = 0;

  Json to_json() const {
    return Json{{"kind", "refine"},           {"doc_id", doc_id},
                {"refined_output", refined_output}, {"changed", changed},
                {"backend_name", backend_name}, {"retries", retries}};
  }
  static RefineRecord from_json(const Json& j) {
    return {j.at("doc_id").get<std::string>(), j.at("refined_output").get<std::string>(), j.at("changed").get<bool>(),
            j.at("backend_name").get<std::string>(), j.at("retries").get<unsigned>()};
  }
};

struct CritiqueRecord {
  std::string doc_id;
  bool verdict = false;
  std::string explanation;
  bool reasked = false;
  std::string backend_name;
  unsigned retries = 0;

  Json to_json() const {
    return Json{{"kind", "critique"},       {"doc_id", doc_id},   {"verdict", verdict},
                {"explanation", explanation}, {"reasked", reasked}, {"backend_name", backend_name},
                {"retries", retries}};
  }
  static CritiqueRecord from_json(const Json& j) {
    return {j.at("doc_id").get<std::string>(), j.at("verdict").get<bool>(), j.at("explanation").get<std::string>(),
            j.at("reasked").get<bool>(), j.at("backend_name").get<std::string>(), j.at("retries").get<unsigned>()};
  }
};

// A document a stage could not produce a record for.
struct SkipRecord {
  std::string doc_id;
  Stage stage = Stage::Draft;
  std::string error;
  unsigned retries = 0;
  bool backend_failure = true;

  Json to_json() const {
    return Json{{"kind", "skip"}, {"doc_id", doc_id}, {"stage", to_string(stage)}, {"error", error},
                {"retries", retries}, {"backend_failure", backend_failure}};
  }
};

template <class R>
using StageOutcome = std::variant<R, SkipRecord>;

// ---- normalization -----------------------------------------------------------

namespace synth_detail {

inline std::optional<std::pair<char, std::size_t>> fence_marker(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && i < 3 && line[i] == ' ') ++i;
  if (i >= line.size() || (line[i] != '`' && line[i] != '~')) return std::nullopt;
  const char c = line[i];
  std::size_t n = 0;
  while (i + n < line.size() && line[i + n] == c) ++n;
  if (n < 3) return std::nullopt;
  return std::pair{c, n};
}

}  // namespace synth_detail

// Drops a line identical to the line right before it and a block identical
// to the block right before it; fenced code keeps its lines. Then applies the
// Markdown whitespace rules.
inline std::string strip_repeated_markdown(std::string_view md) {
  using Block = std::vector<std::string>;
  std::vector<Block> blocks;
  Block cur;
  std::optional<std::pair<char, std::size_t>> fence;
  bool cur_fenced = false;
  auto close_block = [&] {
    if (!cur.empty()) blocks.push_back(std::move(cur));
    cur.clear();
    cur_fenced = false;
  };
  for (const auto& raw : detail::split_lines(md)) {
    const std::string line(detail::rtrim_ascii(raw));
    if (fence) {
      cur.push_back(line);
      const auto m = synth_detail::fence_marker(line);
      if (m && m->first == fence->first && m->second >= fence->second &&
          detail::trim_ascii(line).find_first_not_of(m->first) == std::string_view::npos)
        fence.reset();
      continue;
    }
    if (line.empty()) {
      close_block();
      continue;
    }
    if (const auto m = synth_detail::fence_marker(line)) {
      fence = m;
      cur_fenced = true;
      cur.push_back(line);
      continue;
    }
    if (!cur_fenced && !cur.empty() && cur.back() == line) continue;
    cur.push_back(line);
  }
  close_block();

  std::string out;
  const Block* prev = nullptr;
  for (const auto& b : blocks) {
    if (prev && *prev == b) continue;
    for (const auto& l : b) out += l + "\n";
    out += "\n";
    prev = &b;
  }
  return normalize_markdown_whitespace(out);
}

// Compact re-serialization; a single surrounding code fence is removed
// first. None when the text is not JSON.
inline std::optional<std::string> normalize_json_output(std::string_view text) {
  std::string_view s = detail::trim_ascii(text);
  if (s.starts_with("```")) {
    const auto nl = s.find('\n');
    s = nl == std::string_view::npos ? std::string_view{} : s.substr(nl + 1);
    s = detail::trim_ascii(s);
    if (s.ends_with("```")) s = detail::trim_ascii(s.substr(0, s.size() - 3));
  }
  const Json j = Json::parse(s, nullptr, false);
  if (j.is_discarded()) return std::nullopt;
  return j.dump();
}

inline std::optional<std::string> normalize_output(Task task, std::string_view text) {
  if (task == Task::Json) return normalize_json_output(text);
  return strip_repeated_markdown(text);
}

struct Verdict {
  bool pass = false;
  std::string explanation;
};

// First line exactly PASS or FAIL (trailing whitespace allowed), followed by
// a non-empty explanation.
inline std::optional<Verdict> parse_verdict(std::string_view reply) {
  const auto nl = reply.find('\n');
  const std::string_view first = detail::rtrim_ascii(reply.substr(0, nl));
  if (first != "PASS" && first != "FAIL") return std::nullopt;
  const std::string_view rest = nl == std::string_view::npos ? std::string_view{} : detail::trim_ascii(reply.substr(nl + 1));
  if (rest.empty()) return std::nullopt;
  return Verdict{first == "PASS", std::string(rest)};
}

inline constexpr std::string_view kReaskSuffix =
    "\n\nYour previous reply did not follow the required format. The first line must be exactly PASS or FAIL, "
    "followed by an explanation.";

// ---- ordered worker pool -----------------------------------------------------

struct EngineOptions {
  unsigned jobs = 1;
  std::size_t window = 0;  // items per dispatch round; 0 = 4 * jobs
  std::function<bool()> should_stop;
};

// Pulls items from `next` on the calling thread, runs `work` on up to `jobs`
// threads, and passes results to `commit` strictly in input order. `commit`
// returning false ends the run. A stop request lets finished items commit
// and then throws PipelineInterrupted.
template <class In, class Next, class Work, class Commit>
void run_ordered(Next&& next, Work&& work, Commit&& commit, const EngineOptions& opt) {
  using Out = std::invoke_result_t<Work&, const In&>;
  const unsigned jobs = std::max(1u, opt.jobs);
  const std::size_t window = opt.window ? opt.window : 4 * static_cast<std::size_t>(jobs);
  auto stopping = [&] { return opt.should_stop && opt.should_stop(); };
  for (;;) {
    if (stopping()) throw PipelineInterrupted("interrupted");
    std::vector<In> items;
    while (items.size() < window) {
      std::optional<In> item = next();
      if (!item) break;
      items.push_back(std::move(*item));
    }
    if (items.empty()) return;

    std::vector<std::optional<Out>> results(items.size());
    std::vector<std::exception_ptr> errors(items.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
      for (std::size_t i; (i = cursor.fetch_add(1)) < items.size();) {
        if (stopping()) return;
        try {
          results[i].emplace(work(items[i]));
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(jobs, items.size()));
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      if (!results[i]) throw PipelineInterrupted("interrupted");
      if (!commit(items[i], std::move(*results[i]))) return;
      if (stopping()) throw PipelineInterrupted("interrupted");
    }
  }
}

// ---- JSONL plumbing ----------------------------------------------------------

class JsonlCursor {
 public:
  explicit JsonlCursor(const std::filesystem::path& path) : path_(path), in_(path, std::ios::binary) {
    if (!in_) throw SourceUnreadable("cannot open " + path.string());
  }

  // Next non-blank line parsed; `offset` receives its byte position.
  std::optional<Json> next(std::uint64_t* offset = nullptr) {
    std::string line;
    for (;;) {
      const auto pos = in_.tellg();
      if (!std::getline(in_, line)) return std::nullopt;
      ++lineno_;
      if (detail::trim_ascii(line).empty()) continue;
      Json j = Json::parse(line, nullptr, false);
      if (j.is_discarded())
        throw CorpusFormatError(path_.string() + " line " + std::to_string(lineno_) + " is not JSON");
      if (offset) *offset = static_cast<std::uint64_t>(pos);
      return j;
    }
  }

  Json read_at(std::uint64_t offset) {
    in_.clear();
    in_.seekg(static_cast<std::streamoff>(offset));
    std::string line;
    if (!std::getline(in_, line)) throw CorpusFormatError("bad offset into " + path_.string());
    return Json::parse(line);
  }

 private:
  std::filesystem::path path_;
  std::ifstream in_;
  std::size_t lineno_ = 0;
};

// Reads the ids of a stage log, cutting off a torn final line left by a
// killed process.
inline std::vector<std::string> recover_stage_log(const std::filesystem::path& path) {
  std::vector<std::string> ids;
  std::ifstream in(path, std::ios::binary);
  if (!in) return ids;
  std::string line;
  std::uint64_t good = 0, pos = 0;
  while (std::getline(in, line)) {
    const bool complete = !in.eof();
    const std::uint64_t next_pos = pos + line.size() + (complete ? 1 : 0);
    const Json j = complete ? Json::parse(line, nullptr, false) : Json(nullptr);
    if (!complete || j.is_discarded() || !j.is_object() || !j.contains("doc_id")) break;
    ids.push_back(j["doc_id"].get<std::string>());
    good = pos = next_pos;
  }
  in.close();
  if (good != std::filesystem::file_size(path)) std::filesystem::resize_file(path, good);
  return ids;
}

inline void write_file_atomic(const std::filesystem::path& path, const std::string& data) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << data;
    out.flush();
    if (!out) throw std::runtime_error("cannot write " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

// ---- assembly helpers ------------------------------------------------------

struct DatasetMeta {
  unsigned round = 1;
  std::string backend_name;
  std::string created_at;

  void stamp(Json& j) const {
    j["pipeline_round"] = round;
    j["backend_name"] = backend_name;
    j["created_at"] = created_at;
  }
};

inline std::optional<Json> sft_example(const CorpusDoc& doc, const DraftRecord& draft, const RefineRecord& refine,
                                       const CritiqueRecord& critique, const DatasetMeta& meta) {
  if (!critique.verdict) return std::nullopt;
  Json j{{"doc_id", doc.doc_id}, {"task", to_string(draft.task)}, {"instruction", draft.instruction},
         {"html", doc.html},     {"target_output", refine.refined_output}};
  meta.stamp(j);
  return j;
}

inline Json critique_example(const CorpusDoc& doc, const DraftRecord& draft, const RefineRecord& refine,
                             const CritiqueRecord& critique, const DatasetMeta& meta) {
  Json j{{"doc_id", doc.doc_id},
         {"task", to_string(draft.task)},
         {"instruction", draft.instruction},
         {"input", {{"html", doc.html}, {"refined_output", refine.refined_output}}},
         {"output", {{"verdict", critique.verdict}, {"explanation", critique.explanation}}}};
  meta.stamp(j);
  return j;
}

inline std::optional<Json> dpo_triplet(const CorpusDoc& doc, const DraftRecord& draft, const RefineRecord& refine,
                                       const CritiqueRecord& critique, const DatasetMeta& meta) {
  if (!critique.verdict || refine.refined_output == draft.draft_output) return std::nullopt;
  Json j{{"doc_id", doc.doc_id}, {"task", to_string(draft.task)}, {"instruction", draft.instruction},
         {"html", doc.html},     {"chosen", refine.refined_output}, {"rejected", draft.draft_output}};
  meta.stamp(j);
  return j;
}

struct CritiqueSelection {
  std::vector<std::size_t> order;  // indices into the input, shuffled
  std::size_t negatives = 0;
  std::size_t positives = 0;
  std::vector<std::string> warnings;
};

// Keeps the limiting class whole and downsamples the other toward one
// negative per two positives: pos >= 2 neg keeps 2 neg positives, otherwise
// floor(pos / 2) negatives (at least one). Selected indices are shuffled.
inline CritiqueSelection select_critique_examples(const std::vector<bool>& verdicts, Rng& rng) {
  std::vector<std::size_t> neg, pos;
  for (std::size_t i = 0; i < verdicts.size(); ++i) (verdicts[i] ? pos : neg).push_back(i);
  CritiqueSelection sel;
  auto keep = [&](std::vector<std::size_t>& cls, std::size_t k) {
    if (k >= cls.size()) return;
    auto picks = rng.sample_indices(cls.size(), k);
    std::sort(picks.begin(), picks.end());
    std::vector<std::size_t> kept;
    for (auto p : picks) kept.push_back(cls[p]);
    cls = std::move(kept);
  };
  if (neg.empty() || pos.empty()) {
    if (!verdicts.empty())
      sel.warnings.push_back(std::string("critique dataset has only ") + (neg.empty() ? "positive" : "negative") +
                             " examples");
  } else if (pos.size() >= 2 * neg.size()) {
    keep(pos, 2 * neg.size());
  } else {
    keep(neg, std::max<std::size_t>(1, pos.size() / 2));
  }
  sel.negatives = neg.size();
  sel.positives = pos.size();
  sel.order = neg;
  sel.order.insert(sel.order.end(), pos.begin(), pos.end());
  std::sort(sel.order.begin(), sel.order.end());
  rng.shuffle(sel.order);
  return sel;
}

// ---- pipeline ----------------------------------------------------------------

struct PipelineConfig {
  Task task = Task::Markdown;
  std::filesystem::path corpus;  // corpus store (JSONL of CorpusDoc)
  std::filesystem::path out_dir;
  unsigned round = 1;
  std::uint64_t seed = 0;
  std::string created_at;   // empty: see effective_created_at
  std::string instruction;  // empty: task default
  std::optional<JsonSchemaSpec> schema;
  std::optional<PromptTemplate> draft_template, refine_template, critique_template;
  GenerationParams params;
  RetryPolicy retry;
  unsigned jobs = 1;
  unsigned max_consecutive_failures = 5;
  bool resume = false;
  const std::atomic<bool>* stop = nullptr;   // e.g. set from a SIGINT handler
  std::optional<std::size_t> interrupt_after;  // stop after this many committed log lines
  std::function<void(const std::string&)> log;
};

// Reproducible default: SOURCE_DATE_EPOCH when set, else the Unix epoch.
inline std::string effective_created_at(const std::string& configured) {
  if (!configured.empty()) return configured;
  std::time_t t = 0;
  if (const char* sde = std::getenv("SOURCE_DATE_EPOCH"); sde && *sde) {
    try {
      t = static_cast<std::time_t>(std::stoll(sde));
    } catch (const std::exception&) {
      throw std::invalid_argument("SOURCE_DATE_EPOCH is not an integer");
    }
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct RunResult {
  std::filesystem::path round_dir;
  Json manifest;
  std::vector<std::string> warnings;
};

namespace synth_detail {

struct DocCursor {
  JsonlCursor cursor;
  explicit DocCursor(const std::filesystem::path& p) : cursor(p) {}

  std::optional<CorpusDoc> next(std::uint64_t* offset = nullptr) {
    auto j = cursor.next(offset);
    if (!j) return std::nullopt;
    return CorpusDoc::from_json(*j);
  }

  // Advances to the first document with this id.
  CorpusDoc seek(const std::string& id, std::uint64_t* offset = nullptr) {
    while (auto d = next(offset))
      if (d->doc_id == id) return std::move(*d);
    throw CorpusFormatError("stage log refers to doc_id " + id + " missing from the corpus");
  }
};

template <class R>
struct LogCursor {
  JsonlCursor cursor;
  explicit LogCursor(const std::filesystem::path& p) : cursor(p) {}

  // Next record of kind R, skipping skip lines.
  std::optional<R> next(std::uint64_t* offset = nullptr) {
    while (auto j = cursor.next(offset))
      if (j->at("kind") != "skip") return R::from_json(*j);
    return std::nullopt;
  }

  R seek(const std::string& id, std::uint64_t* offset = nullptr) {
    while (auto r = next(offset))
      if (r->doc_id == id) return std::move(*r);
    throw CorpusFormatError("stage log lacks doc_id " + id);
  }
};

class Runner {
 public:
  Runner(const PipelineConfig& cfg, GenerationBackend& drafter, GenerationBackend& reviewer)
      : cfg_(cfg), drafter_(drafter), reviewer_(reviewer) {
    if (cfg_.task == Task::Json && !cfg_.schema) throw std::invalid_argument("json task needs a schema");
    draft_t_ = cfg_.draft_template ? *cfg_.draft_template : PromptTemplate::builtin(Stage::Draft, cfg_.task);
    refine_t_ = cfg_.refine_template ? *cfg_.refine_template : PromptTemplate::builtin(Stage::Refine, cfg_.task);
    critique_t_ = cfg_.critique_template ? *cfg_.critique_template : PromptTemplate::builtin(Stage::Critique, cfg_.task);
    instruction_ = !cfg_.instruction.empty()            ? cfg_.instruction
                   : cfg_.task == Task::Markdown ? std::string(kDefaultMarkdownInstruction)
                                                 : std::string(kDefaultJsonInstruction);
    schema_text_ = cfg_.schema ? cfg_.schema->to_json().dump(2) : std::string();
    record_instruction_ = cfg_.task == Task::Json ? instruction_ + "\n\nJSON schema:\n" + schema_text_ : instruction_;
    created_at_ = effective_created_at(cfg_.created_at);
    params_ = cfg_.params;
    if (!params_.seed) params_.seed = static_cast<std::int64_t>(cfg_.seed);
    dir_ = cfg_.out_dir / ("round-" + std::to_string(cfg_.round));
    logs_ = dir_ / "logs";
  }

  RunResult run() {
    namespace fs = std::filesystem;
    const Json fingerprint = make_fingerprint();
    fs::create_directories(logs_);
    const auto run_json = dir_ / "run.json";
    if (cfg_.resume && fs::exists(run_json)) {
      const Json stored = Json::parse(corpus_detail::read_whole(run_json).value_or("null"), nullptr, false);
      if (stored != fingerprint) throw ResumeMismatch(mismatch_message(stored, fingerprint));
    } else {
      for (const char* f : {"draft.jsonl", "refine.jsonl", "critique.jsonl"}) fs::remove(logs_ / f);
      fs::remove(dir_ / "manifest.json");
      write_file_atomic(run_json, fingerprint.dump(2) + "\n");
    }
    run_draft();
    run_refine();
    run_critique();
    return assemble(fingerprint);
  }

 private:
  // -- settings ---------------------------------------------------------------

  Json make_fingerprint() const {
    Json j{{"pipeline_round", cfg_.round},
           {"task", to_string(cfg_.task)},
           {"seed", cfg_.seed},
           {"created_at", created_at_},
           {"instruction", instruction_},
           {"schema", cfg_.schema ? cfg_.schema->to_json() : Json(nullptr)},
           {"corpus", {{"path", cfg_.corpus.string()}, {"sha256", sha256_file(cfg_.corpus)}}},
           {"backends", {{"draft", drafter_.name()}, {"review", reviewer_.name()}}},
           {"templates", {{"draft", draft_t_.sha256()}, {"refine", refine_t_.sha256()}, {"critique", critique_t_.sha256()}}},
           {"params", {{"max_output_tokens", params_.max_output_tokens}, {"temperature", params_.temperature},
                       {"seed", params_.seed ? Json(*params_.seed) : Json(nullptr)}}}};
    return j;
  }

  static std::string mismatch_message(const Json& stored, const Json& now) {
    std::string fields;
    if (stored.is_object())
      for (const auto& [k, v] : now.items())
        if (!stored.contains(k) || stored[k] != v) fields += (fields.empty() ? "" : ", ") + k;
    return "cannot resume: settings differ from the interrupted run" + (fields.empty() ? std::string() : " (" + fields + ")");
  }

  std::map<std::string, std::string> prompt_values(const CorpusDoc& doc) const {
    return {{"html", doc.html},     {"instruction", instruction_}, {"schema", schema_text_},
            {"task", std::string(to_string(cfg_.task))}, {"doc_id", doc.doc_id}};
  }

  CallContext context(Stage stage, const CorpusDoc& doc, std::string_view candidate = {}) const {
    CallContext ctx;
    ctx.stage = stage;
    ctx.task = cfg_.task;
    ctx.doc_id = doc.doc_id;
    ctx.html = doc.html;
    ctx.candidate = candidate;
    ctx.schema = cfg_.schema ? &*cfg_.schema : nullptr;
    return ctx;
  }

  EngineOptions engine() {
    EngineOptions e;
    e.jobs = cfg_.jobs;
    e.should_stop = [this] {
      if (cfg_.stop && cfg_.stop->load()) return true;
      return cfg_.interrupt_after && committed_ >= *cfg_.interrupt_after;
    };
    return e;
  }

  void say(const std::string& msg) const {
    if (cfg_.log) cfg_.log(msg);
  }

  // -- stage driver -----------------------------------------------------------

  // Log writer that holds back backend-failure skips until a success follows,
  // so an aborted run leaves them to be retried on resume.
  class StageLog {
   public:
    StageLog(const std::filesystem::path& path, Runner& runner, Stage stage)
        : out_(path, std::ios::binary | std::ios::app), runner_(runner), stage_(stage) {
      if (!out_) throw std::runtime_error("cannot open stage log " + path.string());
    }

    template <class R>
    bool commit(const StageOutcome<R>& outcome) {
      if (const auto* skip = std::get_if<SkipRecord>(&outcome); skip && skip->backend_failure) {
        held_.push_back(skip->to_json().dump());
        if (held_.size() >= std::max(1u, runner_.cfg_.max_consecutive_failures))
          throw BackendUnavailable(std::string(to_string(stage_)) + " stage: " + std::to_string(held_.size()) +
                                   " consecutive documents failed; last error: " + skip->error);
        return true;
      }
      flush_held();
      write(std::visit([](const auto& r) { return r.to_json().dump(); }, outcome));
      return true;
    }

    void finish() { flush_held(); }

   private:
    void flush_held() {
      for (auto& line : held_) write(line);
      held_.clear();
    }
    void write(const std::string& line) {
      out_ << line << '\n';
      out_.flush();
      if (!out_) throw std::runtime_error("failed writing stage log");
      ++runner_.committed_;
    }

    std::ofstream out_;
    Runner& runner_;
    Stage stage_;
    std::vector<std::string> held_;
  };

  // Skips the inputs already present in the log, checking they line up.
  template <class In, class Next, class IdOf>
  auto resume_filter(std::vector<std::string> done, Next next, IdOf id_of) {
    return [done = std::move(done), next = std::move(next), id_of, i = std::size_t{0}]() mutable -> std::optional<In> {
      for (;;) {
        std::optional<In> item = next();
        if (!item || i >= done.size()) return item;
        if (id_of(*item) != done[i])
          throw ResumeMismatch("stage log does not match its inputs at doc_id " + done[i]);
        ++i;
      }
    };
  }

  void run_draft() {
    const auto path = logs_ / "draft.jsonl";
    auto done = recover_stage_log(path);
    say("draft: " + std::to_string(done.size()) + " documents already logged");
    DocCursor corpus(cfg_.corpus);
    std::unordered_set<std::string> seen;
    auto unique_docs = [&]() -> std::optional<CorpusDoc> {
      while (auto d = corpus.next())
        if (seen.insert(d->doc_id).second) return d;
      return std::nullopt;
    };
    auto next = resume_filter<CorpusDoc>(std::move(done), unique_docs, [](const CorpusDoc& d) { return d.doc_id; });
    StageLog log(path, *this, Stage::Draft);
    run_ordered<CorpusDoc>(
        next,
        [&](const CorpusDoc& doc) -> StageOutcome<DraftRecord> {
          const RenderedPrompt p = draft_t_.render(prompt_values(doc));
          unsigned retries = 0;
          try {
            std::string out = generate_with_retry(drafter_, p.system, p.user, params_, context(Stage::Draft, doc),
                                                  cfg_.retry, retries);
            return DraftRecord{doc.doc_id, record_instruction_, cfg_.task, std::move(out), drafter_.name(), created_at_,
                               retries};
          } catch (const RetriesExhausted& e) {
            return SkipRecord{doc.doc_id, Stage::Draft, e.what(), e.retries(), true};
          }
        },
        [&](const CorpusDoc&, StageOutcome<DraftRecord>&& r) { return log.commit(r); }, engine());
    log.finish();
  }

  struct RefineInput {
    CorpusDoc doc;
    DraftRecord draft;
  };

  void run_refine() {
    const auto path = logs_ / "refine.jsonl";
    auto done = recover_stage_log(path);
    DocCursor corpus(cfg_.corpus);
    LogCursor<DraftRecord> drafts(logs_ / "draft.jsonl");
    auto joined = [&]() -> std::optional<RefineInput> {
      auto d = drafts.next();
      if (!d) return std::nullopt;
      CorpusDoc doc = corpus.seek(d->doc_id);
      return RefineInput{std::move(doc), std::move(*d)};
    };
    auto next = resume_filter<RefineInput>(std::move(done), joined, [](const RefineInput& r) { return r.doc.doc_id; });
    StageLog log(path, *this, Stage::Refine);
    run_ordered<RefineInput>(
        next,
        [&](const RefineInput& in) -> StageOutcome<RefineRecord> {
          const auto normalized = normalize_output(cfg_.task, in.draft.draft_output);
          if (!normalized)
            return SkipRecord{in.doc.doc_id, Stage::Refine, std::string(kRefinementUnparseable) + ": draft is not JSON",
                              0, false};
          auto values = prompt_values(in.doc);
          values["draft"] = *normalized;
          const RenderedPrompt p = refine_t_.render(values);
          unsigned retries = 0;
          std::string out;
          try {
            out = generate_with_retry(reviewer_, p.system, p.user, params_,
                                      context(Stage::Refine, in.doc, *normalized), cfg_.retry, retries);
          } catch (const RetriesExhausted& e) {
            return SkipRecord{in.doc.doc_id, Stage::Refine, e.what(), e.retries(), true};
          }
          auto refined = normalize_output(cfg_.task, out);
          if (!refined || detail::trim_ascii(*refined).empty())
            return SkipRecord{in.doc.doc_id, Stage::Refine,
                              std::string(kRefinementUnparseable) + ": refined output is not usable", retries, false};
          const bool changed = *refined != in.draft.draft_output;
          return RefineRecord{in.doc.doc_id, std::move(*refined), changed, reviewer_.name(), retries};
        },
        [&](const RefineInput&, StageOutcome<RefineRecord>&& r) { return log.commit(r); }, engine());
    log.finish();
  }

  struct CritiqueInput {
    CorpusDoc doc;
    RefineRecord refine;
  };

  void run_critique() {
    const auto path = logs_ / "critique.jsonl";
    auto done = recover_stage_log(path);
    DocCursor corpus(cfg_.corpus);
    LogCursor<RefineRecord> refines(logs_ / "refine.jsonl");
    auto joined = [&]() -> std::optional<CritiqueInput> {
      auto r = refines.next();
      if (!r) return std::nullopt;
      CorpusDoc doc = corpus.seek(r->doc_id);
      return CritiqueInput{std::move(doc), std::move(*r)};
    };
    auto next =
        resume_filter<CritiqueInput>(std::move(done), joined, [](const CritiqueInput& c) { return c.doc.doc_id; });
    StageLog log(path, *this, Stage::Critique);
    run_ordered<CritiqueInput>(
        next,
        [&](const CritiqueInput& in) -> StageOutcome<CritiqueRecord> {
          auto values = prompt_values(in.doc);
          values["output"] = in.refine.refined_output;
          const RenderedPrompt p = critique_t_.render(values);
          const CallContext ctx = context(Stage::Critique, in.doc, in.refine.refined_output);
          unsigned retries = 0, more = 0;
          try {
            std::string reply = generate_with_retry(reviewer_, p.system, p.user, params_, ctx, cfg_.retry, retries);
            if (auto v = parse_verdict(reply))
              return CritiqueRecord{in.doc.doc_id, v->pass, std::move(v->explanation), false, reviewer_.name(), retries};
            reply = generate_with_retry(reviewer_, p.system, p.user + std::string(kReaskSuffix), params_, ctx,
                                        cfg_.retry, more);
            retries += more;
            if (auto v = parse_verdict(reply))
              return CritiqueRecord{in.doc.doc_id, v->pass, std::move(v->explanation), true, reviewer_.name(), retries};
            return CritiqueRecord{in.doc.doc_id, false, std::string(kUnparseableCritique), true, reviewer_.name(), retries};
          } catch (const RetriesExhausted& e) {
            return SkipRecord{in.doc.doc_id, Stage::Critique, e.what(), retries + e.retries(), true};
          }
        },
        [&](const CritiqueInput&, StageOutcome<CritiqueRecord>&& r) { return log.commit(r); }, engine());
    log.finish();
  }

  // -- assembly -----------------------------------------------------------------

  struct StageCounts {
    std::size_t records = 0, skipped = 0, unparseable = 0, retries = 0;
  };

  static StageCounts count_log(const std::filesystem::path& path) {
    StageCounts c;
    JsonlCursor cur(path);
    while (auto j = cur.next()) {
      c.retries += j->at("retries").get<std::size_t>();
      if (j->at("kind") == "skip") {
        ++c.skipped;
        if (!j->at("backend_failure").get<bool>()) ++c.unparseable;
      } else {
        ++c.records;
      }
    }
    return c;
  }

  RunResult assemble(const Json& fingerprint) {
    RunResult result;
    result.round_dir = dir_;
    const DatasetMeta meta{cfg_.round, drafter_.name(), created_at_};

    DocCursor corpus(cfg_.corpus);
    LogCursor<DraftRecord> drafts(logs_ / "draft.jsonl");
    LogCursor<RefineRecord> refines(logs_ / "refine.jsonl");
    LogCursor<CritiqueRecord> critiques(logs_ / "critique.jsonl");

    struct Where {
      std::uint64_t doc, draft, refine, critique;
    };
    std::vector<Where> where;
    std::vector<bool> verdicts;
    std::string sft, dpo;
    std::size_t sft_n = 0, dpo_n = 0, pass = 0, fail = 0, unparseable = 0, changed = 0;
    std::uint64_t critique_off = 0;
    while (auto c = critiques.next(&critique_off)) {
      Where w{};
      w.critique = critique_off;
      const RefineRecord r = refines.seek(c->doc_id, &w.refine);
      const DraftRecord d = drafts.seek(c->doc_id, &w.draft);
      const CorpusDoc doc = corpus.seek(c->doc_id, &w.doc);
      (c->verdict ? pass : fail) += 1;
      unparseable += c->explanation == kUnparseableCritique;
      changed += r.changed;
      if (auto j = sft_example(doc, d, r, *c, meta)) {
        sft += j->dump() + "\n";
        ++sft_n;
      }
      if (auto j = dpo_triplet(doc, d, r, *c, meta)) {
        dpo += j->dump() + "\n";
        ++dpo_n;
      }
      where.push_back(w);
      verdicts.push_back(c->verdict);
    }
    if (sft_n == 0) result.warnings.push_back("SFT-filtered dataset is empty: no critique passed");

    Rng rng(cfg_.seed);
    const CritiqueSelection sel = select_critique_examples(verdicts, rng);
    result.warnings.insert(result.warnings.end(), sel.warnings.begin(), sel.warnings.end());
    std::string crit;
    {
      JsonlCursor c_doc(cfg_.corpus), c_draft(logs_ / "draft.jsonl"), c_refine(logs_ / "refine.jsonl"),
          c_crit(logs_ / "critique.jsonl");
      for (auto i : sel.order) {
        const CorpusDoc doc = CorpusDoc::from_json(c_doc.read_at(where[i].doc));
        const DraftRecord d = DraftRecord::from_json(c_draft.read_at(where[i].draft));
        const RefineRecord r = RefineRecord::from_json(c_refine.read_at(where[i].refine));
        const CritiqueRecord c = CritiqueRecord::from_json(c_crit.read_at(where[i].critique));
        crit += critique_example(doc, d, r, c, meta).dump() + "\n";
      }
    }

    // corpus size and duplicates
    std::size_t docs = 0, dups = 0;
    {
      DocCursor all(cfg_.corpus);
      std::unordered_set<std::string> ids;
      while (auto d = all.next()) {
        ++docs;
        dups += !ids.insert(d->doc_id).second;
      }
    }
    if (dups) result.warnings.push_back(std::to_string(dups) + " duplicate doc_id(s) in the corpus were skipped");

    const StageCounts dc = count_log(logs_ / "draft.jsonl");
    const StageCounts rc = count_log(logs_ / "refine.jsonl");
    const StageCounts cc = count_log(logs_ / "critique.jsonl");

    Json m = fingerprint;
    m["corpus"]["documents"] = docs;
    m["corpus"]["duplicates"] = dups;
    m["counts"] = {
        {"draft", {{"records", dc.records}, {"skipped", dc.skipped}, {"retries", dc.retries}}},
        {"refine",
         {{"records", rc.records}, {"skipped", rc.skipped}, {"unparseable", rc.unparseable}, {"changed", changed},
          {"retries", rc.retries}}},
        {"critique",
         {{"records", cc.records}, {"skipped", cc.skipped}, {"pass", pass}, {"fail", fail},
          {"unparseable", unparseable}, {"retries", cc.retries}}},
        {"datasets",
         {{"sft_filtered", sft_n},
          {"critique", {{"negative", sel.negatives}, {"positive", sel.positives}}},
          {"dpo", dpo_n}}}};
    m["datasets"] = {{"sft_filtered", "sft_filtered.jsonl"}, {"critique", "critique.jsonl"}, {"dpo", "dpo.jsonl"}};
    m["warnings"] = result.warnings;
    m["status"] = "complete";

    write_file_atomic(dir_ / "sft_filtered.jsonl", sft);
    write_file_atomic(dir_ / "critique.jsonl", crit);
    write_file_atomic(dir_ / "dpo.jsonl", dpo);
    write_file_atomic(dir_ / "manifest.json", m.dump(2) + "\n");
    result.manifest = std::move(m);
    for (const auto& w : result.warnings) say("warning: " + w);
    return result;
  }

  const PipelineConfig& cfg_;
  GenerationBackend& drafter_;
  GenerationBackend& reviewer_;
  PromptTemplate draft_t_, refine_t_, critique_t_;
  std::string instruction_, schema_text_, record_instruction_, created_at_;
  GenerationParams params_;
  std::filesystem::path dir_, logs_;
  std::size_t committed_ = 0;
};

}  // namespace synth_detail

// Runs (or with cfg.resume, continues) one round. `drafter` writes drafts;
// `reviewer` refines and judges them.
inline RunResult run_pipeline(const PipelineConfig& cfg, GenerationBackend& drafter, GenerationBackend& reviewer) {
  return synth_detail::Runner(cfg, drafter, reviewer).run();
}

// Next round with a new draft backend, typically the model tuned on the
// previous round's datasets.
inline RunResult self_play_round(PipelineConfig cfg, GenerationBackend& new_drafter, GenerationBackend& reviewer) {
  ++cfg.round;
  return run_pipeline(cfg, new_drafter, reviewer);
}

}  // namespace readerkit
