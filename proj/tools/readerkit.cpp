// readerkit command line: convert, extract-json, eval, synth, corpus.
//
// Settings are layered: built-in defaults, then --config FILE (JSON), then
// READERKIT_* environment variables, then flags. --print-config writes the
// effective settings as a config file and exits.
//
// Exit codes: 0 success, 1 fatal error, 2 some inputs failed.

#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "readerkit/corpus.hpp"
#include "readerkit/json_extract.hpp"
#include "readerkit/markdown.hpp"
#include "readerkit/metrics.hpp"
#include "readerkit/report.hpp"
#include "readerkit/synth.hpp"

namespace fs = std::filesystem;
using namespace readerkit;

namespace {

constexpr int kOk = 0, kFatal = 1, kPartial = 2;

std::atomic<bool> g_stop{false};

extern "C" void on_sigint(int) { g_stop.store(true); }

struct Fatal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void note(const std::string& msg) { std::cerr << "readerkit: " << msg << "\n"; }

// ---- configuration -------------------------------------------------------------

Json backend_defaults() {
  return Json{{"kind", "mock"},   {"url", ""},          {"model", ""}, {"token_env", "READERKIT_API_TOKEN"},
              {"name", ""},       {"timeout_s", 120},   {"variant", 0}};
}

Json default_config() {
  Json langs = Json::array();
  for (const auto& l : default_allowed_languages()) langs.push_back(l);
  const unsigned cores = std::max(1u, std::thread::hardware_concurrency());
  return Json{
      {"jobs", cores},
      {"seed", 0},
      {"task", "markdown"},
      {"backend", backend_defaults()},
      {"reviewer", nullptr},
      {"generation", {{"max_output_tokens", 4096}, {"temperature", 0.0}}},
      {"retry", {{"attempts", 3}, {"backoff_ms", {1000, 4000, 16000}}}},
      {"synth",
       {{"round", 1},
        {"created_at", ""},
        {"instruction", ""},
        {"schema", ""},
        {"extraction_template", ""},
        {"templates_dir", ""},
        {"max_consecutive_failures", 5}}},
      {"corpus",
       {{"language_filter", true}, {"languages", langs}, {"batch", 64}, {"max_len", 32768}, {"long_fraction", 0.4}}}};
}

bool same_kind(const Json& a, const Json& b) {
  if (a.is_number() && b.is_number()) return !(a.is_number_integer() && b.is_number_float());
  return a.type() == b.type();
}

// Recursive overlay that only accepts keys and value kinds the defaults know.
void overlay(Json& base, const Json& patch, const std::string& where) {
  if (!patch.is_object()) throw Fatal(where + ": expected an object");
  for (const auto& [k, v] : patch.items()) {
    const std::string key = where.empty() ? k : where + "." + k;
    if (!base.contains(k)) throw Fatal("unknown config key '" + key + "'");
    Json& slot = base[k];
    if (k == "reviewer") {
      if (v.is_null()) {
        slot = nullptr;
        continue;
      }
      Json b = backend_defaults();
      overlay(b, v, key);
      slot = std::move(b);
    } else if (slot.is_object()) {
      overlay(slot, v, key);
    } else if (!same_kind(slot, v)) {
      throw Fatal("config key '" + key + "' has the wrong type");
    } else {
      slot = v;
    }
  }
}

template <class T>
T env_number(const char* name, const char* text) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != std::strlen(text) || v < 0) throw std::invalid_argument("range");
    return static_cast<T>(v);
  } catch (const std::exception&) {
    throw Fatal(std::string("environment variable ") + name + " is not a non-negative integer");
  }
}

void apply_environment(Json& cfg) {
  auto get = [](const char* n) -> const char* {
    const char* v = std::getenv(n);
    return v && *v ? v : nullptr;
  };
  if (auto v = get("READERKIT_JOBS")) cfg["jobs"] = env_number<unsigned>("READERKIT_JOBS", v);
  if (auto v = get("READERKIT_SEED")) cfg["seed"] = env_number<std::uint64_t>("READERKIT_SEED", v);
  if (auto v = get("READERKIT_TASK")) cfg["task"] = v;
  if (auto v = get("READERKIT_BACKEND")) cfg["backend"]["kind"] = v;
  if (auto v = get("READERKIT_BACKEND_URL")) cfg["backend"]["url"] = v;
  if (auto v = get("READERKIT_BACKEND_MODEL")) cfg["backend"]["model"] = v;
  if (auto v = get("READERKIT_TOKEN_ENV")) cfg["backend"]["token_env"] = v;
}

struct Flags {
  std::string config;
  bool print_config = false;
  std::optional<unsigned> jobs;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> task;
  std::optional<std::string> backend, backend_url, backend_model;
  std::optional<unsigned> round;
  std::optional<std::uint64_t> max_len;
  std::optional<double> long_fraction;
  bool no_language_filter = false;
};

Json effective_config(const Flags& f) {
  Json cfg = default_config();
  if (!f.config.empty()) {
    const auto text = corpus_detail::read_whole(f.config);
    if (!text) throw Fatal("cannot read config file " + f.config);
    const Json file = Json::parse(*text, nullptr, false);
    if (file.is_discarded()) throw Fatal("config file " + f.config + " is not valid JSON");
    overlay(cfg, file, "");
  }
  apply_environment(cfg);
  if (f.jobs) cfg["jobs"] = *f.jobs;
  if (f.seed) cfg["seed"] = *f.seed;
  if (f.task) cfg["task"] = *f.task;
  if (f.backend) cfg["backend"]["kind"] = *f.backend;
  if (f.backend_url) cfg["backend"]["url"] = *f.backend_url;
  if (f.backend_model) cfg["backend"]["model"] = *f.backend_model;
  if (f.round) cfg["synth"]["round"] = *f.round;
  if (f.max_len) cfg["corpus"]["max_len"] = *f.max_len;
  if (f.long_fraction) cfg["corpus"]["long_fraction"] = *f.long_fraction;
  if (f.no_language_filter) cfg["corpus"]["language_filter"] = false;

  try {
    (void)parse_task(cfg["task"].get<std::string>());
  } catch (const std::exception& e) {
    throw Fatal(e.what());
  }
  if (cfg["jobs"].get<unsigned>() == 0) cfg["jobs"] = 1;
  return cfg;
}

// ---- shared helpers ---------------------------------------------------------------

Json read_json_file(const std::string& path, const char* what) {
  const auto text = corpus_detail::read_whole(path);
  if (!text) throw Fatal(std::string("cannot read ") + what + " " + path);
  Json j = Json::parse(*text, nullptr, false);
  if (j.is_discarded()) throw Fatal(std::string(what) + " " + path + " is not valid JSON");
  return j;
}

void write_text(const fs::path& path, const std::string& data) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << data;
  out.flush();
  if (!out) throw Fatal("cannot write " + path.string());
}

ExtractionInstruction load_instruction(const std::string& path) {
  if (path.empty()) return {};
  const Json j = read_json_file(path, "instruction file");
  if (!j.is_object()) throw Fatal("instruction file must hold a JSON object");
  for (const auto& [k, v] : j.items())
    if (k != "mode" && k != "include" && k != "exclude") throw Fatal("unknown instruction key '" + k + "'");
  ExtractionInstruction instr;
  const std::string mode = j.value("mode", "main_content");
  if (mode == "scoped") instr.mode = ExtractionMode::Scoped;
  else if (mode != "main_content") throw Fatal("instruction mode must be main_content or scoped");
  auto selectors = [&](const char* key) {
    std::vector<Selector> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) throw Fatal(std::string("instruction '") + key + "' must be an array of selectors");
    for (const auto& s : j[key]) {
      if (!s.is_string()) throw Fatal(std::string("instruction '") + key + "' must hold strings");
      try {
        out.push_back(Selector::parse(s.get<std::string>()));
      } catch (const SelectorError& e) {
        throw Fatal(std::string("bad selector in instruction: ") + e.what());
      }
    }
    return out;
  };
  instr.include = selectors("include");
  instr.exclude = selectors("exclude");
  if (instr.mode == ExtractionMode::Scoped && instr.include.empty())
    throw Fatal("scoped instruction needs at least one include selector");
  return instr;
}

JsonSchemaSpec load_schema(const std::string& path) {
  if (path.empty()) throw Fatal("the JSON task needs a schema (--schema or synth.schema)");
  try {
    return JsonSchemaSpec::from_json(read_json_file(path, "schema"));
  } catch (const Fatal&) {
    throw;
  } catch (const std::exception& e) {
    throw Fatal("invalid schema " + path + ": " + e.what());
  }
}

ExtractionTemplate load_template(const std::string& path, const JsonSchemaSpec& schema) {
  try {
    return ExtractionTemplate::from_json(read_json_file(path, "extraction template"), schema);
  } catch (const Fatal&) {
    throw;
  } catch (const std::exception& e) {
    throw Fatal("invalid extraction template " + path + ": " + e.what());
  }
}

// Output file names follow input stems; a clash would overwrite, so refuse.
std::vector<fs::path> output_paths(const std::vector<std::string>& inputs, const fs::path& dir, const char* ext) {
  std::vector<fs::path> out;
  std::set<fs::path> seen;
  for (const auto& in : inputs) {
    fs::path p = dir / fs::path(in).filename();
    p.replace_extension(ext);
    if (!seen.insert(p).second) throw Fatal("two inputs would both write " + p.string());
    out.push_back(std::move(p));
  }
  return out;
}

// Runs `work` over the inputs on the worker pool; failures are reported and
// counted, successes are written in input order.
template <class Work>
int per_file(const std::vector<std::string>& inputs, const std::vector<fs::path>& outputs, unsigned jobs, Work work) {
  std::size_t i = 0, failed = 0;
  using Result = std::pair<std::optional<std::string>, std::string>;  // output or error
  run_ordered<std::size_t>(
      [&]() -> std::optional<std::size_t> { return i < inputs.size() ? std::optional(i++) : std::nullopt; },
      [&](const std::size_t& k) -> Result {
        const auto html = corpus_detail::read_whole(inputs[k]);
        if (!html) return {std::nullopt, "cannot read input"};
        try {
          return {work(*html, inputs[k]), ""};
        } catch (const std::exception& e) {
          return {std::nullopt, e.what()};
        }
      },
      [&](const std::size_t& k, Result&& r) {
        if (r.first) {
          write_text(outputs[k], *r.first);
        } else {
          ++failed;
          note(inputs[k] + ": " + r.second);
        }
        return true;
      },
      EngineOptions{jobs, 0, {}});
  if (failed == 0) return kOk;
  note(std::to_string(failed) + " of " + std::to_string(inputs.size()) + " inputs failed");
  return failed == inputs.size() ? kFatal : kPartial;
}

// ---- subcommands ------------------------------------------------------------------

struct ConvertArgs {
  std::vector<std::string> inputs;
  std::string output = ".";
  std::string instruction;
};

int cmd_convert(const Json& cfg, const ConvertArgs& a) {
  if (a.inputs.empty()) throw Fatal("convert needs at least one input file");
  const ExtractionInstruction instr = load_instruction(a.instruction);
  const auto outs = output_paths(a.inputs, a.output, ".md");
  return per_file(a.inputs, outs, cfg["jobs"].get<unsigned>(), [&](const std::string& html, const std::string& name) {
    return convert(parse_html(html), instr, name).body;
  });
}

struct ExtractArgs {
  std::vector<std::string> inputs;
  std::string output = ".";
  std::string schema;
  std::string extraction_template;
};

int cmd_extract(const Json& cfg, const ExtractArgs& a) {
  if (a.inputs.empty()) throw Fatal("extract-json needs at least one input file");
  const JsonSchemaSpec schema = load_schema(a.schema.empty() ? cfg["synth"]["schema"].get<std::string>() : a.schema);
  const std::string tpath = a.extraction_template.empty() ? cfg["synth"]["extraction_template"].get<std::string>()
                                                          : a.extraction_template;
  if (tpath.empty()) throw Fatal("extract-json needs --template");
  const ExtractionTemplate tmpl = load_template(tpath, schema);
  const auto outs = output_paths(a.inputs, a.output, ".json");
  return per_file(a.inputs, outs, cfg["jobs"].get<unsigned>(), [&](const std::string& html, const std::string&) {
    return extract_json(parse_html(html), schema, tmpl).dump(2) + "\n";
  });
}

struct EvalArgs {
  std::string predictions, references, schema, model = "model", out;
};

struct EvalRow {
  std::string doc_id, model, output;
};

std::string output_text(const Json& row, const std::string& where) {
  if (!row.contains("output")) throw Fatal(where + ": row lacks \"output\"");
  const Json& o = row["output"];
  return o.is_string() ? o.get<std::string>() : o.dump();
}

std::vector<EvalRow> read_eval_rows(const std::string& path, const std::string& default_model) {
  std::vector<EvalRow> rows;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Fatal("cannot read " + path);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (detail::trim_ascii(line).empty()) continue;
    const std::string where = path + " line " + std::to_string(n);
    const Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("doc_id") || !j["doc_id"].is_string())
      throw Fatal(where + ": expected an object with a string doc_id");
    rows.push_back({j["doc_id"].get<std::string>(), j.value("model", default_model), output_text(j, where)});
  }
  return rows;
}

int cmd_eval(const Json& cfg, const EvalArgs& a) {
  const Task task = parse_task(cfg["task"].get<std::string>());
  const auto preds = read_eval_rows(a.predictions, a.model);
  const auto refs = read_eval_rows(a.references, a.model);
  std::map<std::string, std::string> ref_of;
  for (const auto& r : refs)
    if (!ref_of.emplace(r.doc_id, r.output).second) throw Fatal("duplicate doc_id " + r.doc_id + " in references");
  std::set<std::pair<std::string, std::string>> seen;
  std::vector<std::string> orphans;
  std::set<std::string> predicted;
  for (const auto& p : preds) {
    if (!seen.emplace(p.model, p.doc_id).second)
      throw Fatal("duplicate prediction for doc_id " + p.doc_id + " (model " + p.model + ")");
    predicted.insert(p.doc_id);
    if (!ref_of.count(p.doc_id)) orphans.push_back("prediction without reference: " + p.doc_id);
  }
  for (const auto& r : refs)
    if (!predicted.count(r.doc_id)) orphans.push_back("reference without prediction: " + r.doc_id);
  if (!orphans.empty()) {
    for (const auto& o : orphans) note(o);
    return kFatal;
  }
  if (preds.empty()) throw Fatal("no predictions to evaluate");

  std::optional<JsonSchemaSpec> schema;
  std::map<std::string, Json> truth;
  if (task == Task::Json) {
    schema = load_schema(a.schema.empty() ? cfg["synth"]["schema"].get<std::string>() : a.schema);
    for (const auto& [id, text] : ref_of) {
      Json t = Json::parse(text, nullptr, false);
      if (t.is_discarded()) throw Fatal("reference for " + id + " is not JSON");
      truth.emplace(id, std::move(t));
    }
  }

  std::vector<ReportRow> rows;
  std::vector<Json> per_doc;
  std::size_t i = 0;
  run_ordered<std::size_t>(
      [&]() -> std::optional<std::size_t> { return i < preds.size() ? std::optional(i++) : std::nullopt; },
      [&](const std::size_t& k) -> ReportRow {
        const EvalRow& p = preds[k];
        if (task == Task::Json) return {p.model, "json", json_metrics(p.output, truth.at(p.doc_id), *schema)};
        return {p.model, "markdown", markdown_metrics(p.output, ref_of.at(p.doc_id))};
      },
      [&](const std::size_t& k, ReportRow&& r) {
        Json d{{"doc_id", preds[k].doc_id}, {"model", r.model}, {"task", r.task}};
        if (const auto* m = std::get_if<MetricReport>(&r.metrics)) {
          d["rouge_l"] = m->rouge_l;
          d["levenshtein"] = m->levenshtein_norm;
          d["damerau"] = m->damerau_abs;
          d["jaro_winkler"] = m->jaro_winkler;
        } else {
          const auto& j = std::get<JsonMetricReport>(r.metrics);
          d["f1"] = j.f1;
          d["precision"] = j.precision;
          d["recall"] = j.recall;
          d["pass"] = j.pass;
        }
        per_doc.push_back(std::move(d));
        rows.push_back(std::move(r));
        return true;
      },
      EngineOptions{cfg["jobs"].get<unsigned>(), 0, {}});

  const AggregateReport rep = report(rows);
  const std::string table = rep.to_table();
  std::cout << table;
  if (!a.out.empty()) {
    write_text(fs::path(a.out) / "report.json", rep.to_json().dump(2) + "\n");
    write_text(fs::path(a.out) / "report.txt", table);
    std::string lines;
    for (const auto& d : per_doc) lines += d.dump() + "\n";
    write_text(fs::path(a.out) / "per_doc.jsonl", lines);
  }
  return kOk;
}

struct SynthArgs {
  std::string corpus, out;
  bool resume = false;
  std::optional<std::size_t> interrupt_after;
};

std::unique_ptr<GenerationBackend> make_backend(const Json& b, const Json& cfg, Task task) {
  const std::string kind = b["kind"];
  if (kind == "mock") {
    std::optional<MockBackend::JsonSetup> setup;
    if (task == Task::Json) {
      MockBackend::JsonSetup s{load_schema(cfg["synth"]["schema"]), std::nullopt};
      const std::string tpath = cfg["synth"]["extraction_template"];
      if (!tpath.empty()) s.extraction = load_template(tpath, s.schema);
      setup = std::move(s);
    }
    const std::string name = b["name"].get<std::string>().empty() ? "mock" : b["name"].get<std::string>();
    return std::make_unique<MockBackend>(name, b["variant"].get<std::uint32_t>(), std::move(setup));
  }
  if (kind == "http") {
    HttpBackendConfig h;
    h.url = b["url"];
    h.model = b["model"];
    h.token_env = b["token_env"];
    h.name = b["name"];
    h.timeout = std::chrono::seconds(b["timeout_s"].get<std::int64_t>());
    if (h.url.empty() || h.model.empty()) throw Fatal("http backend needs backend.url and backend.model");
    try {
      return std::make_unique<HttpBackend>(h);
    } catch (const BackendConfigError& e) {
      throw Fatal(e.what());
    }
  }
  throw Fatal("unknown backend kind '" + kind + "' (mock or http)");
}

std::optional<PromptTemplate> template_override(const std::string& dir, const char* file, Stage stage, Task task) {
  if (dir.empty()) return std::nullopt;
  const auto text = corpus_detail::read_whole(fs::path(dir) / file);
  if (!text) return std::nullopt;
  try {
    return PromptTemplate::parse(*text, stage, task);
  } catch (const TemplateError& e) {
    throw Fatal(std::string(file) + ": " + e.what());
  }
}

int cmd_synth(const Json& cfg, const SynthArgs& a) {
  const Task task = parse_task(cfg["task"].get<std::string>());
  const Json& s = cfg["synth"];
  PipelineConfig pc;
  pc.task = task;
  pc.corpus = a.corpus;
  pc.out_dir = a.out;
  pc.round = s["round"];
  pc.seed = cfg["seed"];
  pc.created_at = s["created_at"];
  pc.instruction = s["instruction"];
  if (task == Task::Json) pc.schema = load_schema(s["schema"]);
  const std::string tdir = s["templates_dir"];
  pc.draft_template = template_override(tdir, task == Task::Json ? "draft_json.txt" : "draft_markdown.txt", Stage::Draft, task);
  pc.refine_template = template_override(tdir, "refine.txt", Stage::Refine, task);
  pc.critique_template = template_override(tdir, "critique.txt", Stage::Critique, task);
  pc.params.max_output_tokens = cfg["generation"]["max_output_tokens"];
  pc.params.temperature = cfg["generation"]["temperature"];
  pc.retry.attempts = cfg["retry"]["attempts"];
  pc.retry.backoff.clear();
  for (const auto& ms : cfg["retry"]["backoff_ms"]) pc.retry.backoff.emplace_back(ms.get<std::int64_t>());
  pc.jobs = cfg["jobs"];
  pc.max_consecutive_failures = s["max_consecutive_failures"];
  pc.resume = a.resume;
  pc.stop = &g_stop;
  pc.interrupt_after = a.interrupt_after;
  pc.log = note;
  if (!fs::exists(pc.corpus)) throw Fatal("corpus store " + a.corpus + " does not exist");
  if (pc.round == 0) throw Fatal("round must be at least 1");

  // Backends are built first so configuration errors surface before any call.
  auto drafter = make_backend(cfg["backend"], cfg, task);
  std::unique_ptr<GenerationBackend> own_reviewer;
  if (!cfg["reviewer"].is_null()) own_reviewer = make_backend(cfg["reviewer"], cfg, task);
  GenerationBackend& reviewer = own_reviewer ? *own_reviewer : *drafter;

  std::signal(SIGINT, on_sigint);
  RunResult r;
  try {
    r = run_pipeline(pc, *drafter, reviewer);
  } catch (const PipelineInterrupted&) {
    note("interrupted; stage logs are saved, rerun with --resume to continue");
    return kFatal;
  } catch (const ResumeMismatch& e) {
    throw Fatal(e.what());
  } catch (const BackendUnavailable& e) {
    throw Fatal(std::string("backend unavailable: ") + e.what());
  }
  const Json& counts = r.manifest["counts"];
  std::cout << Json{{"round_dir", r.round_dir.string()}, {"counts", counts}, {"warnings", r.warnings}}.dump(2) << "\n";
  const std::size_t skipped = counts["draft"]["skipped"].get<std::size_t>() +
                              counts["refine"]["skipped"].get<std::size_t>() +
                              counts["critique"]["skipped"].get<std::size_t>();
  if (skipped) note(std::to_string(skipped) + " document stage(s) were skipped; see the stage logs");
  return skipped ? kPartial : kOk;
}

struct CorpusArgs {
  std::string source, store, out;
};

void emit(const Json& j, const std::string& out) {
  if (out.empty()) std::cout << j.dump(2) << "\n";
  else write_text(out, j.dump(2) + "\n");
}

int cmd_ingest(const Json& cfg, const CorpusArgs& a) {
  IngestOptions opt;
  opt.jobs = cfg["jobs"];
  opt.batch = cfg["corpus"]["batch"];
  if (opt.batch == 0) throw Fatal("corpus.batch must be positive");
  if (cfg["corpus"]["language_filter"].get<bool>())
    opt.allowed = cfg["corpus"]["languages"].get<std::set<std::string>>();
  const fs::path store = a.store;
  if (store.has_parent_path()) fs::create_directories(store.parent_path());
  CorpusWriter writer(store.string() + ".tmp");
  IngestSummary summary;
  try {
    summary = ingest(a.source, opt, [&](CorpusDoc&& d) { writer.write(d); });
  } catch (const SourceUnreadable& e) {
    throw Fatal(e.what());
  }
  writer.close();
  fs::rename(store.string() + ".tmp", store);
  for (const auto& w : summary.warnings) note(w);
  std::cout << summary.to_json().dump(2) << "\n";
  return summary.malformed ? kPartial : kOk;
}

int cmd_stats(const CorpusArgs& a) {
  std::vector<std::uint64_t> counts;
  try {
    for_each_stored_doc(a.store, [&](const CorpusDoc& d) { counts.push_back(d.token_count); });
  } catch (const std::exception& e) {
    throw Fatal(e.what());
  }
  emit(length_stats(std::move(counts)).to_json(), a.out);
  return kOk;
}

int cmd_curriculum(const Json& cfg, const CorpusArgs& a) {
  std::vector<CurriculumDoc> docs;
  try {
    for_each_stored_doc(a.store, [&](const CorpusDoc& d) { docs.push_back({d.doc_id, d.token_count}); });
  } catch (const std::exception& e) {
    throw Fatal(e.what());
  }
  try {
    const auto plan = plan_curriculum(docs, cfg["corpus"]["max_len"], cfg["corpus"]["long_fraction"], cfg["seed"]);
    for (const auto& w : plan.warnings) note(w);
    emit(plan.to_json(), a.out);
  } catch (const std::invalid_argument& e) {
    throw Fatal(e.what());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"readerkit: HTML to Markdown/JSON conversion, evaluation and training-data synthesis"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  Flags f;
  app.add_option("--config", f.config, "JSON config file")->check(CLI::ExistingFile);
  app.add_flag("--print-config", f.print_config, "print the effective config as JSON and exit");
  app.add_option("--jobs", f.jobs, "worker threads (default: logical cores)");
  app.add_option("--seed", f.seed, "seed for all sampling");
  app.add_option("--task", f.task, "markdown or json")->check(CLI::IsMember({"markdown", "json"}));

  ConvertArgs conv;
  auto* c_conv = app.add_subcommand("convert", "convert HTML files to Markdown");
  c_conv->add_option("inputs", conv.inputs, "HTML files");
  c_conv->add_option("-o,--output", conv.output, "output directory");
  c_conv->add_option("-i,--instruction", conv.instruction, "instruction JSON {mode, include, exclude}");

  ExtractArgs ext;
  auto* c_ext = app.add_subcommand("extract-json", "extract JSON from HTML files with a template");
  c_ext->add_option("inputs", ext.inputs, "HTML files");
  c_ext->add_option("-o,--output", ext.output, "output directory");
  c_ext->add_option("--schema", ext.schema, "JSON schema file");
  c_ext->add_option("--template", ext.extraction_template, "extraction template file");

  EvalArgs ev;
  auto* c_eval = app.add_subcommand("eval", "score predictions against references");
  c_eval->add_option("--predictions", ev.predictions, "JSONL of {doc_id, output[, model]}")->required();
  c_eval->add_option("--references", ev.references, "JSONL of {doc_id, output}")->required();
  c_eval->add_option("--schema", ev.schema, "JSON schema (json task)");
  c_eval->add_option("--model", ev.model, "model name for rows without one");
  c_eval->add_option("--out", ev.out, "directory for report.json, report.txt and per_doc.jsonl");

  SynthArgs sy;
  auto* c_synth = app.add_subcommand("synth", "run the draft, refine and critique stages and build datasets");
  c_synth->add_option("--corpus", sy.corpus, "corpus store (from corpus ingest)")->required();
  c_synth->add_option("--out", sy.out, "output directory")->required();
  c_synth->add_option("--round", f.round, "pipeline round; run round N+1 with a new draft backend for self-play");
  c_synth->add_flag("--resume", sy.resume, "continue an interrupted run");
  c_synth->add_option("--backend", f.backend, "draft backend kind: mock or http");
  c_synth->add_option("--backend-url", f.backend_url, "draft backend URL");
  c_synth->add_option("--backend-model", f.backend_model, "draft backend model name");
  c_synth->add_option("--interrupt-after", sy.interrupt_after)->group("");  // testing aid

  CorpusArgs ca;
  auto* c_corpus = app.add_subcommand("corpus", "corpus ingestion, statistics and curriculum");
  c_corpus->require_subcommand(1);
  auto* c_ingest = c_corpus->add_subcommand("ingest", "build a corpus store from HTML files or JSONL");
  c_ingest->add_option("source", ca.source, "directory of .html files or JSONL of {url, html}")->required();
  c_ingest->add_option("-o,--output", ca.store, "corpus store to write")->required();
  c_ingest->add_flag("--no-language-filter", f.no_language_filter, "keep every language");
  auto* c_stats = c_corpus->add_subcommand("stats", "token-length statistics");
  c_stats->add_option("store", ca.store, "corpus store")->required();
  c_stats->add_option("-o,--output", ca.out, "write JSON here instead of stdout");
  auto* c_cur = c_corpus->add_subcommand("curriculum", "split into long and short buckets");
  c_cur->add_option("store", ca.store, "corpus store")->required();
  c_cur->add_option("--max-len", f.max_len, "context length in tokens");
  c_cur->add_option("--long-fraction", f.long_fraction, "share of the long bucket")->check(CLI::Range(0.0, 1.0));
  c_cur->add_option("-o,--output", ca.out, "write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kFatal;
  }

  try {
    const Json cfg = effective_config(f);
    if (f.print_config) {
      std::cout << cfg.dump(2) << "\n";
      return kOk;
    }
    if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return kFatal;
    }
    if (c_conv->parsed()) {
      if (conv.inputs.empty()) {
        std::cerr << c_conv->help();
        return kFatal;
      }
      return cmd_convert(cfg, conv);
    }
    if (c_ext->parsed()) return cmd_extract(cfg, ext);
    if (c_eval->parsed()) return cmd_eval(cfg, ev);
    if (c_synth->parsed()) return cmd_synth(cfg, sy);
    if (c_ingest->parsed()) return cmd_ingest(cfg, ca);
    if (c_stats->parsed()) return cmd_stats(ca);
    if (c_cur->parsed()) return cmd_curriculum(cfg, ca);
  } catch (const Fatal& e) {
    note(e.what());
  } catch (const std::exception& e) {
    note(std::string("error: ") + e.what());
  }
  return kFatal;
}
