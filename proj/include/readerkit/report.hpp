#pragma once

// Per-(model, task) aggregation of metric rows into a JSON summary and an
// aligned text table.

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "readerkit/json_schema.hpp"
#include "readerkit/metrics.hpp"

namespace readerkit {

class EmptyInput : public std::invalid_argument {
 public:
  EmptyInput() : std::invalid_argument("report needs at least one row") {}
};

struct ReportRow {
  std::string model;
  std::string task;
  std::variant<MetricReport, JsonMetricReport> metrics;
};

struct MarkdownAggregate {
  std::string model, task;
  std::size_t count = 0;
  double rouge_l = 0, levenshtein_norm = 0, damerau_abs = 0, jaro_winkler = 0;
};

struct JsonAggregate {
  std::string model, task;
  std::size_t count = 0;
  double f1 = 0, precision = 0, recall = 0, pass_rate = 0;
};

struct AggregateReport {
  std::vector<MarkdownAggregate> markdown;
  std::vector<JsonAggregate> json;

  Json to_json() const;
  std::string to_table() const;
};

inline const std::vector<std::string>& markdown_columns() {
  static const std::vector<std::string> cols{"Task", "Model", "Rouge-L", "Levenshtein", "Damerau", "Jaro-Winkler"};
  return cols;
}

inline const std::vector<std::string>& json_columns() {
  static const std::vector<std::string> cols{"Task", "Model", "F1", "Precision", "Recall", "Pass-Rate"};
  return cols;
}

// Groups keep the order in which (model, task) first appears. Sums are
// accumulated in row order, so equal input gives equal output bits.
inline AggregateReport report(const std::vector<ReportRow>& rows) {
  if (rows.empty()) throw EmptyInput();
  AggregateReport out;
  for (const auto& row : rows) {
    if (const auto* m = std::get_if<MetricReport>(&row.metrics)) {
      auto it = std::find_if(out.markdown.begin(), out.markdown.end(),
                             [&](const auto& a) { return a.model == row.model && a.task == row.task; });
      if (it == out.markdown.end()) it = out.markdown.insert(out.markdown.end(), MarkdownAggregate{row.model, row.task});
      ++it->count;
      it->rouge_l += m->rouge_l;
      it->levenshtein_norm += m->levenshtein_norm;
      it->damerau_abs += static_cast<double>(m->damerau_abs);
      it->jaro_winkler += m->jaro_winkler;
    } else {
      const auto& j = std::get<JsonMetricReport>(row.metrics);
      auto it = std::find_if(out.json.begin(), out.json.end(),
                             [&](const auto& a) { return a.model == row.model && a.task == row.task; });
      if (it == out.json.end()) it = out.json.insert(out.json.end(), JsonAggregate{row.model, row.task});
      ++it->count;
      it->f1 += j.f1;
      it->precision += j.precision;
      it->recall += j.recall;
      it->pass_rate += j.pass ? 1.0 : 0.0;
    }
  }
  for (auto& a : out.markdown) {
    const double n = static_cast<double>(a.count);
    a.rouge_l /= n;
    a.levenshtein_norm /= n;
    a.damerau_abs /= n;
    a.jaro_winkler /= n;
  }
  for (auto& a : out.json) {
    const double n = static_cast<double>(a.count);
    a.f1 /= n;
    a.precision /= n;
    a.recall /= n;
    a.pass_rate /= n;
  }
  return out;
}

inline Json AggregateReport::to_json() const {
  Json j = Json::object();
  if (!markdown.empty()) {
    Json rows = Json::array();
    for (const auto& a : markdown)
      rows.push_back({{"model", a.model}, {"task", a.task}, {"count", a.count}, {"rouge_l", a.rouge_l},
                      {"levenshtein", a.levenshtein_norm}, {"damerau", a.damerau_abs}, {"jaro_winkler", a.jaro_winkler}});
    j["markdown"] = {{"columns", markdown_columns()}, {"rows", std::move(rows)}};
  }
  if (!json.empty()) {
    Json rows = Json::array();
    for (const auto& a : json)
      rows.push_back({{"model", a.model}, {"task", a.task}, {"count", a.count}, {"f1", a.f1},
                      {"precision", a.precision}, {"recall", a.recall}, {"pass_rate", a.pass_rate}});
    j["json"] = {{"columns", json_columns()}, {"rows", std::move(rows)}};
  }
  return j;
}

namespace report_detail {

inline std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

inline std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& body) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = detail::code_point_count(header[c]);
    for (const auto& r : body) width[c] = std::max(width[c], detail::code_point_count(r[c]));
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) s += "  ";
      const std::size_t pad = width[c] - detail::code_point_count(cells[c]);
      // text columns left-aligned, numbers right-aligned
      if (c < 2) s += cells[c] + std::string(pad, ' ');
      else s += std::string(pad, ' ') + cells[c];
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s + "\n";
  };
  std::string out = line(header);
  std::size_t total = 0;
  for (auto w : width) total += w;
  out += std::string(total + 2 * (width.size() - 1), '-') + "\n";
  for (const auto& r : body) out += line(r);
  return out;
}

}  // namespace report_detail

inline std::string AggregateReport::to_table() const {
  using report_detail::fixed;
  std::string out;
  if (!markdown.empty()) {
    std::vector<std::vector<std::string>> body;
    for (const auto& a : markdown)
      body.push_back({a.task, a.model, fixed(a.rouge_l, 4), fixed(a.levenshtein_norm, 4), fixed(a.damerau_abs, 2),
                      fixed(a.jaro_winkler, 4)});
    out += report_detail::render_table(markdown_columns(), body);
  }
  if (!json.empty()) {
    if (!out.empty()) out += "\n";
    std::vector<std::vector<std::string>> body;
    for (const auto& a : json)
      body.push_back({a.task, a.model, fixed(a.f1, 4), fixed(a.precision, 4), fixed(a.recall, 4), fixed(a.pass_rate, 4)});
    out += report_detail::render_table(json_columns(), body);
  }
  return out;
}

}  // namespace readerkit
