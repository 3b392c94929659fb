// End-to-end runs of the readerkit executable.

#include <gtest/gtest.h>
#include <httplib.h>
#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

#include <csignal>
#include <thread>

#include <algorithm>
#include <cstdio>
#include <set>

#include "pipeline_fixtures.hpp"
#include "readerkit/corpus.hpp"
#include "test_util.hpp"

using readerkit::Json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

// Runs the CLI with `args` (already quoted where needed) and optional
// environment assignments.
Result cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const fs::path err = fs::temp_directory_path() / ("readerkit_cli_err_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  const std::string cmd = "env -u READERKIT_JOBS -u READERKIT_SEED -u READERKIT_TASK -u READERKIT_BACKEND " + env + " " +
                          quote(READERKIT_CLI) + " " + args + " 2>" + quote(err.string());
  Result r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = testutil::read_file(err);
  fs::remove(err);
  return r;
}

std::string q(const fs::path& p) { return quote(p.string()); }

std::string write(const fs::path& p, std::string_view data) {
  testutil::write_file(p, data);
  return q(p);
}

std::vector<Json> jsonl(const fs::path& p) {
  std::vector<Json> rows;
  std::ifstream in(p);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) rows.push_back(Json::parse(line));
  return rows;
}

std::map<std::string, std::string> dataset_bytes(const fs::path& round_dir) {
  std::map<std::string, std::string> m;
  for (const char* f : {"sft_filtered.jsonl", "critique.jsonl", "dpo.jsonl", "manifest.json", "logs/draft.jsonl",
                        "logs/refine.jsonl", "logs/critique.jsonl"})
    m[f] = testutil::read_file(round_dir / f);
  return m;
}

}  // namespace

// ---- convert / extract-json ------------------------------------------------------

TEST(CliConvert, HeadingFile) {
  const auto dir = testutil::scratch_dir("cli_convert");
  const auto in = write(dir / "page.html", "<html><body><h1>Title</h1><p>Some body text for the page.</p></body></html>");
  const auto r = cli("convert " + in + " -o " + q(dir / "out"));
  EXPECT_EQ(r.code, 0) << r.err;
  const std::string md = testutil::read_file(dir / "out" / "page.md");
  EXPECT_TRUE(md.starts_with("# Title\n")) << md;
}

TEST(CliConvert, NoInputsIsUsageError) {
  const auto r = cli("convert");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("Usage"), std::string::npos) << r.err;
}

TEST(CliConvert, PartialFailure) {
  const auto dir = testutil::scratch_dir("cli_partial");
  const auto a = write(dir / "a.html", "<h1>A</h1><p>alpha text</p>");
  const auto b = write(dir / "b.html", "<h1>B</h1><p>beta text</p>");
  const auto r = cli("convert " + a + " " + q(dir / "missing.html") + " " + b + " -o " + q(dir / "out") + " --jobs 2");
  EXPECT_EQ(r.code, 2) << r.err;
  EXPECT_TRUE(fs::exists(dir / "out" / "a.md"));
  EXPECT_TRUE(fs::exists(dir / "out" / "b.md"));
  EXPECT_EQ(std::distance(fs::directory_iterator(dir / "out"), fs::directory_iterator{}), 2);
  EXPECT_NE(r.err.find("missing.html"), std::string::npos);
}

TEST(CliConvert, ScopedInstruction) {
  const auto dir = testutil::scratch_dir("cli_scoped");
  const auto in = write(dir / "p.html", "<div id=a><h2>Keep</h2><p class=x>drop me</p><p>kept text</p></div><div>other</div>");
  const auto instr = write(dir / "i.json", R"({"mode":"scoped","include":["#a"],"exclude":["p.x"]})");
  const auto r = cli("convert " + in + " -i " + instr + " -o " + q(dir / "out"));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(testutil::read_file(dir / "out" / "p.md"), "## Keep\n\nkept text\n");
  const auto bad = write(dir / "bad.json", R"({"mode":"scoped","include":["#a >"]})");
  EXPECT_EQ(cli("convert " + in + " -i " + bad + " -o " + q(dir / "out")).code, 1);
  // Scope matching nothing fails that input.
  const auto none = write(dir / "none.json", R"({"mode":"scoped","include":["#zzz"]})");
  EXPECT_EQ(cli("convert " + in + " -i " + none + " -o " + q(dir / "out2")).code, 1);
}

TEST(CliExtract, ProductPages) {
  const auto dir = testutil::scratch_dir("cli_extract");
  const auto schema = write(dir / "schema.json", fixtures::kProductSchema);
  const auto tmpl = write(dir / "tmpl.json", fixtures::kProductTemplate);
  const auto a = write(dir / "a.html", fixtures::product_page(1));
  const auto r = cli("extract-json " + a + " --schema " + schema + " --template " + tmpl + " -o " + q(dir / "out"));
  EXPECT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(testutil::read_file(dir / "out" / "a.json"));
  EXPECT_TRUE(j.contains("name") && j.contains("price") && j["tags"].is_array()) << j;
  EXPECT_EQ(cli("extract-json " + a + " --schema " + schema + " -o " + q(dir / "out")).code, 1);
}

// ---- eval ----------------------------------------------------------------------------

TEST(CliEval, IdenticalMarkdownIsPerfect) {
  const auto dir = testutil::scratch_dir("cli_eval");
  std::string rows;
  for (int i = 0; i < 5; ++i)
    rows += Json{{"doc_id", "d" + std::to_string(i)}, {"output", "# T" + std::to_string(i) + "\n\nbody words\n"}}.dump() + "\n";
  const auto p = write(dir / "p.jsonl", rows);
  const auto r = cli("eval --predictions " + p + " --references " + p + " --model mine --out " + q(dir / "rep"));
  EXPECT_EQ(r.code, 0) << r.err;
  const Json rep = Json::parse(testutil::read_file(dir / "rep" / "report.json"));
  const Json& row = rep["markdown"]["rows"][0];
  EXPECT_EQ(row["model"], "mine");
  EXPECT_EQ(row["count"], 5);
  EXPECT_EQ(row["rouge_l"], 1.0);
  EXPECT_EQ(row["levenshtein"], 0.0);
  EXPECT_EQ(row["damerau"], 0.0);
  EXPECT_EQ(row["jaro_winkler"], 1.0);
  EXPECT_EQ(rep["markdown"]["columns"], (Json{"Task", "Model", "Rouge-L", "Levenshtein", "Damerau", "Jaro-Winkler"}));
  EXPECT_NE(r.out.find("Rouge-L"), std::string::npos);
  EXPECT_EQ(jsonl(dir / "rep" / "per_doc.jsonl").size(), 5u);
}

TEST(CliEval, OrphansAreFatal) {
  const auto dir = testutil::scratch_dir("cli_orphans");
  const auto p = write(dir / "p.jsonl", "{\"doc_id\":\"a\",\"output\":\"x\"}\n{\"doc_id\":\"b\",\"output\":\"y\"}\n");
  const auto r = write(dir / "r.jsonl", "{\"doc_id\":\"a\",\"output\":\"x\"}\n{\"doc_id\":\"c\",\"output\":\"z\"}\n");
  const auto res = cli("eval --predictions " + p + " --references " + r);
  EXPECT_EQ(res.code, 1);
  EXPECT_NE(res.err.find("prediction without reference: b"), std::string::npos) << res.err;
  EXPECT_NE(res.err.find("reference without prediction: c"), std::string::npos) << res.err;
}

TEST(CliEval, JsonPassRate) {
  const auto dir = testutil::scratch_dir("cli_eval_json");
  const auto schema = write(dir / "schema.json", fixtures::kProductSchema);
  std::string preds, refs;
  const int n = 4;
  for (int i = 0; i < n; ++i) {
    const Json truth{{"name", "n" + std::to_string(i)}, {"price", i + 0.5}, {"tags", Json::array({"a"})}};
    refs += Json{{"doc_id", std::to_string(i)}, {"output", truth}}.dump() + "\n";
    preds += Json{{"doc_id", std::to_string(i)}, {"output", i == 2 ? std::string("{\"name\": ") : truth.dump()}}.dump() + "\n";
  }
  const auto r = cli("--task json eval --predictions " + write(dir / "p.jsonl", preds) + " --references " +
                     write(dir / "r.jsonl", refs) + " --schema " + schema + " --out " + q(dir / "rep"));
  EXPECT_EQ(r.code, 0) << r.err;
  const Json rep = Json::parse(testutil::read_file(dir / "rep" / "report.json"));
  EXPECT_DOUBLE_EQ(rep["json"]["rows"][0]["pass_rate"].get<double>(), (n - 1.0) / n);
  EXPECT_EQ(rep["json"]["columns"], (Json{"Task", "Model", "F1", "Precision", "Recall", "Pass-Rate"}));
}

// ---- corpus ------------------------------------------------------------------------

TEST(CliCorpus, IngestEmptyDirectory) {
  const auto dir = testutil::scratch_dir("cli_ingest_empty");
  fs::create_directories(dir / "src");
  const auto r = cli("corpus ingest " + q(dir / "src") + " -o " + q(dir / "store.jsonl"));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir / "store.jsonl"));
  EXPECT_EQ(testutil::read_file(dir / "store.jsonl"), "");
  EXPECT_EQ(Json::parse(r.out)["accepted"], 0);
}

TEST(CliCorpus, IngestStatsCurriculum) {
  const auto dir = testutil::scratch_dir("cli_corpus");
  std::vector<std::uint64_t> lengths;
  for (int i = 0; i < 30; ++i) {
    const std::string page = fixtures::article_page(static_cast<std::uint64_t>(i));
    testutil::write_file(dir / "src" / ("p" + std::to_string(i) + ".html"), page);
    lengths.push_back(readerkit::estimate_tokens(page));
  }
  testutil::write_file(dir / "src" / "copy.html", fixtures::article_page(0));
  const auto store = q(dir / "store.jsonl");
  auto r = cli("--jobs 3 corpus ingest " + q(dir / "src") + " -o " + store);
  ASSERT_EQ(r.code, 0) << r.err;
  const Json summary = Json::parse(r.out);
  EXPECT_EQ(summary["accepted"], 30);
  EXPECT_EQ(summary["duplicates"], 1);

  r = cli("corpus stats " + store);
  ASSERT_EQ(r.code, 0) << r.err;
  const Json stats = Json::parse(r.out);
  std::sort(lengths.begin(), lengths.end());
  long double sum = 0;
  for (auto v : lengths) sum += v;
  EXPECT_EQ(stats["count"], 30);
  EXPECT_DOUBLE_EQ(stats["mean"].get<double>(), static_cast<double>(sum / 30));
  EXPECT_EQ(stats["max"], lengths.back());

  const auto plan1 = cli("--seed 4 corpus curriculum " + store + " --max-len 4096 --long-fraction 0.3");
  const auto plan2 = cli("--seed 4 corpus curriculum " + store + " --max-len 4096 --long-fraction 0.3");
  ASSERT_EQ(plan1.code, 0) << plan1.err;
  EXPECT_EQ(plan1.out, plan2.out);
  const Json plan = Json::parse(plan1.out);
  EXPECT_EQ(plan["seed"], 4);
  EXPECT_EQ(plan["long_bucket"].size() + plan["short_bucket"].size(), 30u);
  EXPECT_EQ(cli("corpus curriculum " + store + " --max-len 0").code, 1);
  EXPECT_EQ(cli("corpus stats " + q(dir / "nope.jsonl")).code, 1);
}

TEST(CliCorpus, JsonlWithBadRowIsPartial) {
  const auto dir = testutil::scratch_dir("cli_ingest_jsonl");
  std::string rows = Json{{"url", "u1"}, {"html", fixtures::article_page(1)}}.dump() + "\n{broken\n";
  const auto r = cli("corpus ingest " + write(dir / "in.jsonl", rows) + " -o " + q(dir / "s.jsonl"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_EQ(jsonl(dir / "s.jsonl").size(), 1u);
}

// ---- config layering ------------------------------------------------------------------

TEST(CliConfig, LayersAndPrintConfig) {
  const auto dir = testutil::scratch_dir("cli_config");
  const auto file = write(dir / "c.json", R"({"seed": 11, "jobs": 2, "synth": {"round": 3}})");
  auto cfg = Json::parse(cli("--config " + file + " --print-config convert").out);
  EXPECT_EQ(cfg["seed"], 11);
  EXPECT_EQ(cfg["jobs"], 2);
  EXPECT_EQ(cfg["synth"]["round"], 3);
  EXPECT_EQ(cfg["backend"]["kind"], "mock");
  cfg = Json::parse(cli("--config " + file + " --print-config convert", "READERKIT_SEED=12").out);
  EXPECT_EQ(cfg["seed"], 12);  // environment over file
  cfg = Json::parse(cli("--config " + file + " --seed 13 --print-config convert", "READERKIT_SEED=12").out);
  EXPECT_EQ(cfg["seed"], 13);  // flag over environment

  // Printed config is itself a config file that reproduces the settings.
  const std::string printed = cli("--config " + file + " --seed 13 --task json --print-config convert").out;
  const auto again = write(dir / "again.json", printed);
  EXPECT_EQ(cli("--config " + again + " --print-config convert").out, printed);

  EXPECT_EQ(cli("--config " + write(dir / "bad.json", R"({"sed": 1})") + " --print-config convert").code, 1);
  EXPECT_EQ(cli("--config " + write(dir / "bad2.json", R"({"jobs": "many"})") + " --print-config convert").code, 1);
  EXPECT_EQ(cli("--print-config convert", "READERKIT_JOBS=lots").code, 1);
  EXPECT_EQ(cli("--task yaml convert x.html").code, 1);
}

TEST(CliConfig, PrintConfigNeedsNoSubcommand) {
  const auto r = cli("--seed 5 --print-config");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["seed"], 5);
  const auto bare = cli("");
  EXPECT_EQ(bare.code, 1);
  EXPECT_NE(bare.err.find("Subcommands"), std::string::npos);
}

// ---- synth ---------------------------------------------------------------------------

namespace {

fs::path fixture_store(const fs::path& dir, std::size_t n) {
  return fixtures::write_corpus(dir / "store.jsonl", n, fixtures::article_page);
}

}  // namespace

TEST(CliSynth, ByteStableAcrossRerunsAndJobs) {
  const auto dir = testutil::scratch_dir("cli_synth");
  const auto store = q(fixture_store(dir, 20));
  const std::string common = " synth --corpus " + store + " --out ";
  auto r = cli("--seed 3 --jobs 1" + common + q(dir / "a"));
  ASSERT_EQ(r.code, 0) << r.err;
  ASSERT_EQ(cli("--seed 3 --jobs 1" + common + q(dir / "a")).code, 0);
  ASSERT_EQ(cli("--seed 3 --jobs 4" + common + q(dir / "b")).code, 0);
  const auto a = dataset_bytes(dir / "a" / "round-1"), b = dataset_bytes(dir / "b" / "round-1");
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a.at("sft_filtered.jsonl").empty());
  const Json manifest = Json::parse(a.at("manifest.json"));
  EXPECT_EQ(manifest["seed"], 3);
  EXPECT_EQ(manifest["corpus"]["documents"], 20);
  // A different seed reshuffles the critique dataset.
  ASSERT_EQ(cli("--seed 4" + common + q(dir / "c")).code, 0);
  EXPECT_NE(testutil::read_file(dir / "c" / "round-1" / "critique.jsonl"), a.at("critique.jsonl"));
}

TEST(CliSynth, InterruptThenResume) {
  const auto dir = testutil::scratch_dir("cli_resume");
  const auto store = q(fixture_store(dir, 20));
  ASSERT_EQ(cli("synth --corpus " + store + " --out " + q(dir / "ref")).code, 0);
  const auto expected = dataset_bytes(dir / "ref" / "round-1");
  for (int k : {5, 27, 48}) {
    const auto out = q(dir / ("run" + std::to_string(k)));
    const auto r = cli("--jobs 3 synth --corpus " + store + " --out " + out + " --interrupt-after " + std::to_string(k));
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("--resume"), std::string::npos) << r.err;
    const auto done = cli("--jobs 2 synth --corpus " + store + " --out " + out + " --resume");
    ASSERT_EQ(done.code, 0) << done.err;
    EXPECT_EQ(dataset_bytes(dir / ("run" + std::to_string(k)) / "round-1"), expected) << k;
  }
  // Changed settings are refused on resume.
  const auto out = q(dir / "mismatch");
  EXPECT_EQ(cli("synth --corpus " + store + " --out " + out + " --interrupt-after 3").code, 1);
  const auto bad = cli("--seed 9 synth --corpus " + store + " --out " + out + " --resume");
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("seed"), std::string::npos) << bad.err;
}

TEST(CliSynth, RemoteBackendWithoutTokenFailsEarly) {
  const auto dir = testutil::scratch_dir("cli_token");
  const auto store = q(fixture_store(dir, 3));
  const auto r = cli("synth --corpus " + store + " --out " + q(dir / "o") +
                         " --backend http --backend-url http://127.0.0.1:9/v1/chat --backend-model m",
                     "-u READERKIT_API_TOKEN");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("READERKIT_API_TOKEN"), std::string::npos) << r.err;
  EXPECT_FALSE(fs::exists(dir / "o" / "round-1" / "logs" / "draft.jsonl"));
}

TEST(CliSynth, SelfPlayRoundWithSwappedBackend) {
  const auto dir = testutil::scratch_dir("cli_selfplay");
  const auto store = q(fixture_store(dir, 20));
  const auto tuned = write(dir / "tuned.json", R"({"backend": {"name": "tuned", "variant": 1}, "reviewer": {}})");
  ASSERT_EQ(cli("synth --corpus " + store + " --out " + q(dir / "o")).code, 0);
  const auto r = cli("--config " + tuned + " synth --corpus " + store + " --out " + q(dir / "o") + " --round 2");
  ASSERT_EQ(r.code, 0) << r.err;
  const Json m = Json::parse(testutil::read_file(dir / "o" / "round-2" / "manifest.json"));
  EXPECT_EQ(m["pipeline_round"], 2);
  EXPECT_EQ(m["backends"]["draft"], "tuned");
  EXPECT_EQ(m["backends"]["review"], "mock");
  for (const auto& row : jsonl(dir / "o" / "round-2" / "sft_filtered.jsonl")) {
    EXPECT_EQ(row["pipeline_round"], 2);
    EXPECT_EQ(row["backend_name"], "tuned");
  }
  EXPECT_TRUE(fs::exists(dir / "o" / "round-1" / "manifest.json"));
}

TEST(CliSynth, JsonTaskWithMock) {
  const auto dir = testutil::scratch_dir("cli_synth_json");
  const auto store = q(fixtures::write_corpus(dir / "store.jsonl", 16, fixtures::product_page));
  const auto cfg = write(dir / "c.json", Json{{"task", "json"},
                                             {"synth",
                                              {{"schema", (dir / "schema.json").string()},
                                               {"extraction_template", (dir / "tmpl.json").string()}}}}
                                            .dump());
  testutil::write_file(dir / "schema.json", fixtures::kProductSchema);
  testutil::write_file(dir / "tmpl.json", fixtures::kProductTemplate);
  const auto r = cli("--config " + cfg + " synth --corpus " + store + " --out " + q(dir / "o"));
  EXPECT_TRUE(r.code == 0 || r.code == 2) << r.err;
  const auto sft = jsonl(dir / "o" / "round-1" / "sft_filtered.jsonl");
  ASSERT_FALSE(sft.empty());
  for (const auto& row : sft) EXPECT_FALSE(Json::parse(row["target_output"].get<std::string>(), nullptr, false).is_discarded());
  // Skipped (unparseable) drafts make the run partial.
  const Json m = Json::parse(testutil::read_file(dir / "o" / "round-1" / "manifest.json"));
  EXPECT_EQ(r.code, m["counts"]["refine"]["skipped"].get<int>() > 0 ? 2 : 0);
}

// ---- ctrl-C against a remote backend -----------------------------------------------

namespace {

// Chat endpoint answering slowly and deterministically: verdicts for
// critique prompts, otherwise a Markdown page derived from the prompt.
struct SlowServer {
  httplib::Server server;
  int port = 0;
  std::thread thread;

  SlowServer() {
    server.Post("/v1/chat/completions", [](const httplib::Request& req, httplib::Response& res) {
      std::this_thread::sleep_for(std::chrono::milliseconds(15));
      const Json body = Json::parse(req.body);
      const std::string system = body["messages"][0]["content"];
      const std::string user = body["messages"][1]["content"];
      const std::string text = system.find("PASS or FAIL") != std::string::npos
                                   ? (user.size() % 3 ? "PASS\nlooks right" : "FAIL\nmissing text")
                                   : "# Page\n\nbody of " + std::to_string(user.size()) + " characters\n";
      res.set_content(Json{{"choices", {{{"message", {{"content", text}}}}}}}.dump(), "application/json");
    });
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~SlowServer() {
    server.stop();
    thread.join();
  }
};

std::size_t complete_lines(const fs::path& p) {
  const std::string s = testutil::read_file(p);
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST(CliSynth, SigintCheckpointsAndResumes) {
  SlowServer srv;
  const auto dir = testutil::scratch_dir("cli_sigint");
  const fs::path store = fixture_store(dir, 20);
  const std::string url = "http://127.0.0.1:" + std::to_string(srv.port) + "/v1/chat/completions";
  const std::string remote = " --backend http --backend-url " + url + " --backend-model slow";
  const std::string env = "READERKIT_API_TOKEN=t";
  ASSERT_EQ(cli("--jobs 2 synth --corpus " + q(store) + " --out " + q(dir / "ref") + remote, env).code, 0);

  const fs::path out = dir / "run";
  const std::vector<std::string> args = {READERKIT_CLI, "--jobs", "2", "synth", "--corpus", store.string(),
                                         "--out", out.string(), "--backend", "http", "--backend-url", url,
                                         "--backend-model", "slow"};
  std::vector<char*> argv;
  for (const auto& a : args) argv.push_back(const_cast<char*>(a.c_str()));
  argv.push_back(nullptr);
  ::setenv("READERKIT_API_TOKEN", "t", 1);
  const pid_t pid = ::fork();
  ASSERT_GE(pid, 0);
  if (pid == 0) {
    const int devnull = ::open("/dev/null", O_WRONLY);
    ::dup2(devnull, 1);
    ::dup2(devnull, 2);
    ::execv(argv[0], argv.data());
    ::_exit(127);
  }
  const fs::path draft_log = out / "round-1" / "logs" / "draft.jsonl";
  for (int i = 0; i < 500 && (!fs::exists(draft_log) || complete_lines(draft_log) < 4); ++i)
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  ::kill(pid, SIGINT);
  int status = 0;
  ::waitpid(pid, &status, 0);
  ::unsetenv("READERKIT_API_TOKEN");
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), 1);
  EXPECT_FALSE(fs::exists(out / "round-1" / "manifest.json"));
  const std::string partial = testutil::read_file(draft_log);
  EXPECT_TRUE(partial.empty() || partial.back() == '\n');
  EXPECT_LT(complete_lines(draft_log), 20u);

  const auto r = cli("--jobs 3 synth --corpus " + q(store) + " --out " + q(out) + remote + " --resume", env);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(dataset_bytes(out / "round-1"), dataset_bytes(dir / "ref" / "round-1"));
}
