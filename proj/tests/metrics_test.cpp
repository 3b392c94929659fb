#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "readerkit/json_schema.hpp"
#include "readerkit/metrics.hpp"
#include "readerkit/report.hpp"
#include "test_util.hpp"

using namespace readerkit;

namespace {

// Exponential recursions straight from the definitions.
std::size_t naive_lev(const std::u32string& a, const std::u32string& b, std::size_t i, std::size_t j) {
  if (i == 0) return j;
  if (j == 0) return i;
  return std::min({naive_lev(a, b, i - 1, j) + 1, naive_lev(a, b, i, j - 1) + 1,
                   naive_lev(a, b, i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1)});
}

std::size_t naive_osa(const std::u32string& a, const std::u32string& b, std::size_t i, std::size_t j) {
  if (i == 0) return j;
  if (j == 0) return i;
  std::size_t best = std::min({naive_osa(a, b, i - 1, j) + 1, naive_osa(a, b, i, j - 1) + 1,
                               naive_osa(a, b, i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1)});
  if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) best = std::min(best, naive_osa(a, b, i - 2, j - 2) + 1);
  return best;
}

// Textbook O(n*m) Jaro with an explicit window scan.
double textbook_jaro(const std::u32string& a, const std::u32string& b) {
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  const long window = std::max<long>(static_cast<long>(std::max(a.size(), b.size())) / 2 - 1, 0);
  std::vector<bool> ma(a.size()), mb(b.size());
  std::size_t m = 0;
  for (long i = 0; i < static_cast<long>(a.size()); ++i) {
    for (long j = std::max(0L, i - window); j <= std::min(static_cast<long>(b.size()) - 1, i + window); ++j) {
      if (!mb[static_cast<std::size_t>(j)] && a[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(j)]) {
        ma[static_cast<std::size_t>(i)] = mb[static_cast<std::size_t>(j)] = true;
        ++m;
        break;
      }
    }
  }
  if (m == 0) return 0.0;
  std::size_t t = 0, k = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!ma[i]) continue;
    while (!mb[k]) ++k;
    if (a[i] != b[k]) ++t;
    ++k;
  }
  const double md = static_cast<double>(m);
  return (md / a.size() + md / b.size() + (md - static_cast<double>(t / 2)) / md) / 3.0;
}

// LCS by enumerating every subsequence of the shorter token list.
std::size_t brute_lcs(const std::vector<std::string_view>& a, const std::vector<std::string_view>& b) {
  std::size_t best = 0;
  const auto& s = a.size() <= b.size() ? a : b;
  const auto& l = a.size() <= b.size() ? b : a;
  for (std::uint32_t mask = 0; mask < (1u << s.size()); ++mask) {
    std::size_t pos = 0, len = 0;
    bool ok = true;
    for (std::size_t i = 0; i < s.size() && ok; ++i) {
      if (!(mask & (1u << i))) continue;
      while (pos < l.size() && l[pos] != s[i]) ++pos;
      if (pos == l.size()) ok = false;
      else {
        ++pos;
        ++len;
      }
    }
    if (ok) best = std::max(best, len);
  }
  return best;
}

std::u32string random_u32(std::mt19937_64& rng, std::size_t max_len, std::size_t alphabet) {
  std::u32string s(testutil::pick(rng, max_len + 1), U'a');
  for (auto& c : s) c = static_cast<char32_t>(U'a' + testutil::pick(rng, alphabet));
  return s;
}

}  // namespace

TEST(Levenshtein, CanonicalValues) {
  EXPECT_EQ(levenshtein("kitten", "sitting"), 3u);
  EXPECT_NEAR(levenshtein_norm("kitten", "sitting"), 3.0 / 7.0, 1e-12);
  EXPECT_EQ(levenshtein_norm("same", "same"), 0.0);
  EXPECT_EQ(levenshtein_norm("", "abc"), 1.0);
  EXPECT_EQ(levenshtein_norm("", ""), 0.0);
  // code points, not bytes
  EXPECT_EQ(levenshtein("caf\xC3\xA9", "cafe"), 1u);
}

TEST(Damerau, CanonicalValues) {
  EXPECT_EQ(damerau_abs("ab", "ba"), 1u);
  EXPECT_EQ(damerau_abs("ca", "abc"), 3u);
  EXPECT_EQ(damerau_abs("abc", "abc"), 0u);
  EXPECT_EQ(damerau_abs("", "abcd"), 4u);
}

TEST(JaroWinkler, CanonicalValues) {
  EXPECT_NEAR(jaro_winkler("MARTHA", "MARHTA"), 0.9611, 1e-4);
  EXPECT_NEAR(jaro(U"MARTHA", U"MARHTA"), 0.9444, 1e-4);
  EXPECT_NEAR(jaro_winkler("DWAYNE", "DUANE"), 0.84, 1e-4);
  EXPECT_NEAR(jaro_winkler("DIXON", "DICKSONX"), 0.8133, 1e-4);
  EXPECT_EQ(jaro_winkler("abc", "abc"), 1.0);
  EXPECT_EQ(jaro_winkler("abc", "xyz"), 0.0);
  EXPECT_EQ(jaro_winkler("", ""), 1.0);
  EXPECT_EQ(jaro_winkler("a", ""), 0.0);
}

TEST(RougeL, CanonicalValues) {
  EXPECT_EQ(rouge_l("a b c", "a b c"), 1.0);
  EXPECT_NEAR(rouge_l("the cat sat", "the cat"), 0.8, 1e-12);
  EXPECT_EQ(rouge_l("a b", "c d"), 0.0);
  EXPECT_EQ(rouge_l("", ""), 1.0);
  EXPECT_EQ(rouge_l("  ", "x"), 0.0);
  EXPECT_EQ(rouge_l("**a** b", "a b"), 0.5);
}

TEST(Metrics, OracleEquivalenceOnShortStrings) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const std::u32string a = random_u32(rng, 8, 4), b = random_u32(rng, 8, 4);
    ASSERT_EQ(levenshtein(a, b), naive_lev(a, b, a.size(), b.size()));
    ASSERT_EQ(damerau_osa(a, b), naive_osa(a, b, a.size(), b.size()));
    ASSERT_NEAR(jaro(a, b), textbook_jaro(a, b), 1e-12);
  }
}

TEST(Metrics, JaroQueueMatchesTextbookOnLongerStrings) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 500; ++i) {
    const std::u32string a = random_u32(rng, 60, 5), b = random_u32(rng, 60, 5);
    ASSERT_NEAR(jaro(a, b), textbook_jaro(a, b), 1e-12);
  }
}

TEST(Metrics, RougeMatchesBruteForceLcs) {
  std::mt19937_64 rng(5);
  const std::vector<std::string> vocab = {"a", "b", "c", "**d**", "#"};
  for (int i = 0; i < 500; ++i) {
    std::string x, y;
    for (std::size_t k = testutil::pick(rng, 9); k > 0; --k) x += testutil::choose(rng, vocab) + " ";
    for (std::size_t k = testutil::pick(rng, 9); k > 0; --k) y += testutil::choose(rng, vocab) + "\n";
    const auto tx = detail::split_ascii_whitespace(x), ty = detail::split_ascii_whitespace(y);
    double expect;
    if (tx.empty() && ty.empty()) expect = 1.0;
    else if (tx.empty() || ty.empty()) expect = 0.0;
    else {
      const double l = static_cast<double>(brute_lcs(tx, ty));
      const double p = l / tx.size(), r = l / ty.size();
      expect = p + r == 0 ? 0.0 : 2 * p * r / (p + r);
    }
    ASSERT_NEAR(rouge_l(x, y), expect, 1e-12) << x << "|" << y;
  }
}

TEST(Metrics, SymmetryRangeTriangle) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 1000; ++i) {
    const std::string a = detail::to_utf8(random_u32(rng, 20, 6));
    const std::string b = detail::to_utf8(random_u32(rng, 20, 6));
    const std::string c = detail::to_utf8(random_u32(rng, 20, 6));
    EXPECT_EQ(levenshtein_norm(a, b), levenshtein_norm(b, a));
    EXPECT_EQ(damerau_abs(a, b), damerau_abs(b, a));
    EXPECT_NEAR(jaro_winkler(a, b), jaro_winkler(b, a), 1e-12) << a << " " << b;
    EXPECT_LE(levenshtein(a, c), levenshtein(a, b) + levenshtein(b, c));
    for (double v : {levenshtein_norm(a, b), jaro_winkler(a, b), rouge_l(a, b)}) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
  }
}

TEST(Metrics, RangeUnderByteFuzz) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 500; ++i) {
    const std::string a = testutil::random_bytes(rng, 40), b = testutil::random_bytes(rng, 40);
    const MetricReport r = markdown_metrics(a, b);
    EXPECT_GE(r.rouge_l, 0.0);
    EXPECT_LE(r.rouge_l, 1.0);
    EXPECT_GE(r.levenshtein_norm, 0.0);
    EXPECT_LE(r.levenshtein_norm, 1.0);
    EXPECT_GE(r.jaro_winkler, 0.0);
    EXPECT_LE(r.jaro_winkler, 1.0);
  }
}

TEST(Metrics, RougeIgnoresWhitespaceRuns) {
  EXPECT_EQ(rouge_l("a  b\n\nc", "x a b c"), rouge_l("a b c", "x\ta   b c"));
}

TEST(Metrics, IdenticalInputsArePerfect) {
  const MetricReport r = markdown_metrics("# T\n\nbody *x*\n", "# T\n\nbody *x*\n");
  EXPECT_EQ(r.rouge_l, 1.0);
  EXPECT_EQ(r.levenshtein_norm, 0.0);
  EXPECT_EQ(r.damerau_abs, 0u);
  EXPECT_EQ(r.jaro_winkler, 1.0);
}

TEST(JsonMetrics, Contract) {
  const JsonSchemaSpec schema = JsonSchemaSpec::from_json(Json::parse(
      R"({"type":"object","properties":{"a":{"type":"integer"},"b":{"type":"integer"},"c":{"type":"integer"}}})"));
  const Json truth = Json::parse(R"({"a":1,"c":3})");
  const JsonMetricReport same = json_metrics(R"({"c":3,"a":1})", truth, schema);
  EXPECT_EQ(same.precision, 1.0);
  EXPECT_EQ(same.recall, 1.0);
  EXPECT_EQ(same.f1, 1.0);
  EXPECT_TRUE(same.pass);
  const JsonMetricReport half = json_metrics(R"({"a":1,"b":2})", truth, schema);
  EXPECT_EQ(half.precision, 0.5);
  EXPECT_EQ(half.recall, 0.5);
  EXPECT_EQ(half.f1, 0.5);
  EXPECT_TRUE(half.pass);
  const JsonMetricReport broken = json_metrics("not json{", truth, schema);
  EXPECT_FALSE(broken.pass);
  EXPECT_EQ(broken.f1, 0.0);
  EXPECT_EQ(broken.precision, 0.0);
  const JsonMetricReport invalid = json_metrics(R"({"a":"1","c":3})", truth, schema);
  EXPECT_FALSE(invalid.pass);
  EXPECT_EQ(invalid.precision, 0.5);
}

TEST(JsonMetrics, ReserializedTruthScoresOne) {
  const JsonSchemaSpec schema = JsonSchemaSpec::from_json(Json::object());
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    Json truth = Json::object();
    truth["v"] = testutil::random_json(rng, 4);
    const JsonMetricReport r = json_metrics(truth.dump(1), truth, schema);
    EXPECT_EQ(r.f1, 1.0);
  }
}

TEST(Report, Aggregation) {
  EXPECT_THROW(report({}), EmptyInput);
  std::vector<ReportRow> rows;
  for (double v : {0.6, 0.8, 1.0}) rows.push_back({"m", "md", MetricReport{v, 0.0, 2, 1.0}});
  rows.push_back({"m", "json", JsonMetricReport{1, 1, 1, true}});
  rows.push_back({"m", "json", JsonMetricReport{0, 0, 0, false}});
  const AggregateReport rep = report(rows);
  ASSERT_EQ(rep.markdown.size(), 1u);
  EXPECT_NEAR(rep.markdown[0].rouge_l, 0.8, 1e-12);
  EXPECT_EQ(rep.markdown[0].damerau_abs, 2.0);
  ASSERT_EQ(rep.json.size(), 1u);
  EXPECT_EQ(rep.json[0].pass_rate, 0.5);
  EXPECT_EQ(rep.json[0].f1, 0.5);

  const std::string table = rep.to_table();
  EXPECT_NE(table.find("Task  Model  Rouge-L  Levenshtein  Damerau  Jaro-Winkler"), std::string::npos) << table;
  EXPECT_NE(table.find("F1  Precision  Recall  Pass-Rate"), std::string::npos) << table;
  const Json j = rep.to_json();
  EXPECT_EQ(j["markdown"]["columns"], Json::parse(R"(["Task","Model","Rouge-L","Levenshtein","Damerau","Jaro-Winkler"])"));
  EXPECT_EQ(j["json"]["columns"], Json::parse(R"(["Task","Model","F1","Precision","Recall","Pass-Rate"])"));
}

TEST(Report, SingleRowEqualsRow) {
  const AggregateReport rep = report({{"x", "t", MetricReport{0.25, 0.5, 7, 0.75}}});
  EXPECT_EQ(rep.markdown[0].rouge_l, 0.25);
  EXPECT_EQ(rep.markdown[0].levenshtein_norm, 0.5);
  EXPECT_EQ(rep.markdown[0].damerau_abs, 7.0);
  EXPECT_EQ(rep.markdown[0].jaro_winkler, 0.75);
}
