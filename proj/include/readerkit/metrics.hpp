#pragma once

// String metrics for Markdown outputs and node-set metrics for JSON outputs.
// Character metrics work on Unicode scalar values.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "readerkit/detail/text.hpp"
#include "readerkit/json_schema.hpp"

namespace readerkit {

struct MetricReport {
  double rouge_l = 0.0;
  double levenshtein_norm = 0.0;
  std::uint64_t damerau_abs = 0;
  double jaro_winkler = 0.0;
};

struct JsonMetricReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  bool pass = false;
};

namespace metric_detail {

inline double f1_of(double p, double r) noexcept { return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r); }

// Shared prefix and suffix never change an edit distance.
template <class Seq>
void trim_common(Seq& a, Seq& b) {
  std::size_t pre = 0;
  while (pre < a.size() && pre < b.size() && a[pre] == b[pre]) ++pre;
  std::size_t suf = 0;
  while (suf < a.size() - pre && suf < b.size() - pre && a[a.size() - 1 - suf] == b[b.size() - 1 - suf]) ++suf;
  a = a.substr(pre, a.size() - pre - suf);
  b = b.substr(pre, b.size() - pre - suf);
}

inline std::size_t lcs_length(const std::vector<std::string_view>& a, const std::vector<std::string_view>& b) {
  const auto& shorter = a.size() < b.size() ? a : b;
  const auto& longer = a.size() < b.size() ? b : a;
  std::vector<std::size_t> row(shorter.size() + 1, 0);
  for (const auto& tok : longer) {
    std::size_t diag = 0;
    for (std::size_t j = 1; j <= shorter.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = tok == shorter[j - 1] ? diag + 1 : std::max(row[j], row[j - 1]);
      diag = up;
    }
  }
  return row.back();
}

}  // namespace metric_detail

// LCS F1 (beta = 1) over maximal non-whitespace tokens.
inline double rouge_l(std::string_view candidate, std::string_view reference) {
  const auto c = detail::split_ascii_whitespace(candidate);
  const auto r = detail::split_ascii_whitespace(reference);
  if (c.empty() && r.empty()) return 1.0;
  if (c.empty() || r.empty()) return 0.0;
  const double lcs = static_cast<double>(metric_detail::lcs_length(c, r));
  return metric_detail::f1_of(lcs / static_cast<double>(c.size()), lcs / static_cast<double>(r.size()));
}

inline std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  metric_detail::trim_common(a, b);
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0u : 1u)});
      diag = up;
    }
  }
  return row[b.size()];
}

inline std::size_t levenshtein(std::string_view a, std::string_view b) {
  return levenshtein(std::u32string_view(detail::to_code_points(a)), std::u32string_view(detail::to_code_points(b)));
}

// Edit distance divided by the longer length; 0 when both are empty.
inline double levenshtein_norm(std::string_view candidate, std::string_view reference) {
  const std::u32string a = detail::to_code_points(candidate);
  const std::u32string b = detail::to_code_points(reference);
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 0.0;
  return static_cast<double>(levenshtein(std::u32string_view(a), std::u32string_view(b))) / static_cast<double>(longest);
}

// Optimal string alignment distance: adjacent transpositions allowed, no
// substring edited twice. Three rolling rows.
inline std::size_t damerau_osa(std::u32string_view a, std::u32string_view b) {
  metric_detail::trim_common(a, b);
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t n = b.size();
  std::vector<std::size_t> prev2(n + 1), prev(n + 1), cur(n + 1);
  for (std::size_t j = 0; j <= n; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      std::size_t v = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost});
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) v = std::min(v, prev2[j - 2] + 1);
      cur[j] = v;
    }
    std::swap(prev2, prev);
    std::swap(prev, cur);
  }
  return prev[n];
}

inline std::uint64_t damerau_abs(std::string_view candidate, std::string_view reference) {
  const std::u32string a = detail::to_code_points(candidate);
  const std::u32string b = detail::to_code_points(reference);
  return damerau_osa(a, b);
}

inline double jaro(std::u32string_view a, std::u32string_view b) {
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  const std::size_t longest = std::max(a.size(), b.size());
  const std::size_t window = longest / 2 >= 1 ? longest / 2 - 1 : 0;

  // Unmatched positions of each character of b, ascending. Both the window
  // floor and matches only ever consume the front, so each queue is walked
  // once.
  std::unordered_map<char32_t, std::deque<std::size_t>> free_pos;
  for (std::size_t j = 0; j < b.size(); ++j) free_pos[b[j]].push_back(j);

  std::vector<char> b_matched(b.size(), 0);
  std::vector<char32_t> a_seq;
  a_seq.reserve(std::min(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto it = free_pos.find(a[i]);
    if (it == free_pos.end()) continue;
    auto& q = it->second;
    const std::size_t lo = i > window ? i - window : 0;
    while (!q.empty() && q.front() < lo) q.pop_front();
    if (q.empty() || q.front() > i + window) continue;
    b_matched[q.front()] = 1;
    q.pop_front();
    a_seq.push_back(a[i]);
  }
  const std::size_t m = a_seq.size();
  if (m == 0) return 0.0;
  std::size_t half_transpositions = 0;
  std::size_t k = 0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (!b_matched[j]) continue;
    if (b[j] != a_seq[k]) ++half_transpositions;
    ++k;
  }
  const double md = static_cast<double>(m);
  const double t = static_cast<double>(half_transpositions / 2);
  return (md / static_cast<double>(a.size()) + md / static_cast<double>(b.size()) + (md - t) / md) / 3.0;
}

// Jaro similarity with the Winkler prefix boost (scale 0.1, prefix capped at
// 4), applied when the Jaro score exceeds 0.7.
inline double jaro_winkler(std::u32string_view a, std::u32string_view b) {
  const double j = jaro(a, b);
  if (j <= 0.7) return j;
  std::size_t prefix = 0;
  while (prefix < 4 && prefix < a.size() && prefix < b.size() && a[prefix] == b[prefix]) ++prefix;
  return j + static_cast<double>(prefix) * 0.1 * (1.0 - j);
}

inline double jaro_winkler(std::string_view candidate, std::string_view reference) {
  const std::u32string a = detail::to_code_points(candidate);
  const std::u32string b = detail::to_code_points(reference);
  return jaro_winkler(std::u32string_view(a), std::u32string_view(b));
}

inline MetricReport markdown_metrics(std::string_view candidate, std::string_view reference) {
  const std::u32string a = detail::to_code_points(candidate);
  const std::u32string b = detail::to_code_points(reference);
  MetricReport r;
  r.rouge_l = rouge_l(candidate, reference);
  const std::size_t longest = std::max(a.size(), b.size());
  r.levenshtein_norm = longest == 0 ? 0.0 : static_cast<double>(levenshtein(std::u32string_view(a), std::u32string_view(b))) / static_cast<double>(longest);
  r.damerau_abs = damerau_osa(a, b);
  r.jaro_winkler = jaro_winkler(std::u32string_view(a), std::u32string_view(b));
  return r;
}

// Leaf node-set precision/recall against `truth`. An unparseable prediction
// scores zero and fails; otherwise pass means the prediction validates.
inline JsonMetricReport json_metrics(std::string_view prediction_text, const Json& truth, const JsonSchemaSpec& schema) {
  JsonMetricReport r;
  Json pred = Json::parse(prediction_text, nullptr, false);
  if (pred.is_discarded()) return r;
  const JsonNodeSet p = to_node_set(pred);
  const JsonNodeSet t = to_node_set(truth);
  const double hit = static_cast<double>(node_set_overlap(p, t));
  r.precision = p.empty() ? 0.0 : hit / static_cast<double>(p.size());
  r.recall = t.empty() ? 0.0 : hit / static_cast<double>(t.size());
  r.f1 = metric_detail::f1_of(r.precision, r.recall);
  r.pass = validate(pred, schema).ok;
  return r;
}

}  // namespace readerkit
