#pragma once

// Corpus ingestion, length statistics and length-curriculum planning.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_set>
#include <vector>

#include "hash.hpp"
#include "json_schema.hpp"
#include "langid.hpp"
#include "random.hpp"

namespace readerkit {

class SourceUnreadable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyCorpus : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CorpusFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using TokenCounter = std::function<std::uint64_t(std::string_view)>;

// ceil(utf8 bytes / 4)
inline std::uint64_t estimate_tokens(std::string_view text) noexcept { return (text.size() + 3) / 4; }

struct CorpusDoc {
  std::string doc_id;
  std::optional<std::string> url;
  std::string html;
  std::string lang = std::string(kUndetermined);
  std::uint64_t token_count = 0;

  bool operator==(const CorpusDoc&) const = default;

  Json to_json() const {
    return Json{{"doc_id", doc_id},
                {"url", url ? Json(*url) : Json(nullptr)},
                {"html", html},
                {"lang", lang},
                {"token_count", token_count}};
  }

  static CorpusDoc from_json(const Json& j) {
    if (!j.is_object()) throw CorpusFormatError("corpus record is not an object");
    auto str = [&](const char* key) -> std::string {
      const auto it = j.find(key);
      if (it == j.end() || !it->is_string()) throw CorpusFormatError(std::string("corpus record lacks string '") + key + "'");
      return it->get<std::string>();
    };
    CorpusDoc d;
    d.doc_id = str("doc_id");
    d.html = str("html");
    d.lang = str("lang");
    if (const auto it = j.find("url"); it != j.end() && it->is_string()) d.url = it->get<std::string>();
    const auto tc = j.find("token_count");
    if (tc == j.end() || !tc->is_number_unsigned()) {
      if (tc == j.end() || !tc->is_number_integer() || tc->get<std::int64_t>() < 0)
        throw CorpusFormatError("corpus record lacks non-negative 'token_count'");
    }
    d.token_count = tc->get<std::uint64_t>();
    return d;
  }
};

// Fills every derived field from the html bytes.
inline CorpusDoc make_corpus_doc(std::string html, std::optional<std::string> url, const TokenCounter& counter) {
  CorpusDoc d;
  d.doc_id = content_id(html);
  d.url = std::move(url);
  d.lang = detect_language(html, {}).lang;
  d.token_count = counter ? counter(html) : estimate_tokens(html);
  d.html = std::move(html);
  return d;
}

struct IngestOptions {
  TokenCounter counter;                           // empty: estimate_tokens
  std::optional<std::set<std::string>> allowed;   // set: drop other languages
  unsigned jobs = 1;
  std::size_t batch = 64;
};

struct IngestSummary {
  std::size_t accepted = 0;
  std::size_t duplicates = 0;
  std::size_t filtered = 0;
  std::size_t malformed = 0;
  std::vector<std::string> warnings;

  Json to_json() const {
    return Json{{"accepted", accepted}, {"duplicates", duplicates}, {"filtered", filtered},
                {"malformed", malformed}, {"warnings", warnings}};
  }
};

namespace corpus_detail {

struct RawItem {
  std::string html;
  std::optional<std::string> url;
};

inline bool is_html_path(const std::filesystem::path& p) {
  const std::string ext = detail::ascii_lowercase(p.extension().string());
  return ext == ".html" || ext == ".htm";
}

inline std::optional<std::string> read_whole(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) return std::nullopt;
  return data;
}

template <class Sink>
class Batcher {
 public:
  Batcher(const IngestOptions& opt, IngestSummary& summary, Sink& sink)
      : opt_(opt), summary_(summary), sink_(sink) {}

  void push(RawItem item) {
    pending_.push_back(std::move(item));
    if (pending_.size() >= std::max<std::size_t>(opt_.batch, 1)) flush();
  }

  void flush() {
    std::vector<CorpusDoc> docs(pending_.size());
    const unsigned jobs = std::max(1u, std::min<unsigned>(opt_.jobs, static_cast<unsigned>(pending_.size())));
    auto work = [&](std::size_t begin) {
      for (std::size_t i = begin; i < pending_.size(); i += jobs)
        docs[i] = make_corpus_doc(std::move(pending_[i].html), std::move(pending_[i].url), opt_.counter);
    };
    if (jobs <= 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t);
    }
    pending_.clear();
    // in input order, so duplicates resolve the same way for any job count
    for (auto& d : docs) {
      if (!seen_.insert(d.doc_id).second) {
        ++summary_.duplicates;
        continue;
      }
      if (opt_.allowed && (d.lang == kUndetermined || !opt_.allowed->count(d.lang))) {
        ++summary_.filtered;
        continue;
      }
      ++summary_.accepted;
      sink_(std::move(d));
    }
  }

 private:
  const IngestOptions& opt_;
  IngestSummary& summary_;
  Sink& sink_;
  std::vector<RawItem> pending_;
  std::unordered_set<std::string> seen_;
};

}  // namespace corpus_detail

// Streams documents from a directory tree of .html/.htm files (visited in
// sorted path order) or from a JSONL file of {url, html} rows into `sink`.
// Duplicate content is dropped; unreadable files and malformed rows are
// skipped with a warning.
template <class Sink>
IngestSummary ingest(const std::filesystem::path& source, const IngestOptions& opt, Sink&& sink) {
  namespace fs = std::filesystem;
  IngestSummary summary;
  auto warn = [&](std::string msg) {
    ++summary.malformed;
    summary.warnings.push_back(std::move(msg));
  };
  corpus_detail::Batcher<std::remove_reference_t<Sink>> batcher(opt, summary, sink);

  std::error_code ec;
  const auto status = fs::status(source, ec);
  if (ec || !fs::exists(status)) throw SourceUnreadable("cannot read corpus source: " + source.string());

  if (fs::is_directory(status)) {
    std::vector<fs::path> files;
    fs::recursive_directory_iterator it(source, fs::directory_options::skip_permission_denied, ec);
    if (ec) throw SourceUnreadable("cannot list corpus directory: " + source.string());
    for (const fs::recursive_directory_iterator end; it != end; it.increment(ec)) {
      if (ec) throw SourceUnreadable("error walking corpus directory: " + ec.message());
      if (it->is_regular_file(ec) && corpus_detail::is_html_path(it->path())) files.push_back(it->path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      auto data = corpus_detail::read_whole(f);
      if (!data) {
        warn("unreadable file: " + f.string());
        continue;
      }
      batcher.push({std::move(*data), std::nullopt});
    }
  } else {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw SourceUnreadable("cannot open corpus file: " + source.string());
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (detail::trim_ascii(line).empty()) continue;
      const Json row = Json::parse(line, nullptr, false);
      if (row.is_discarded() || !row.is_object()) {
        warn("line " + std::to_string(lineno) + ": not a JSON object");
        continue;
      }
      const auto html = row.find("html");
      if (html == row.end() || !html->is_string()) {
        warn("line " + std::to_string(lineno) + ": missing string 'html'");
        continue;
      }
      std::optional<std::string> url;
      if (const auto u = row.find("url"); u != row.end() && !u->is_null()) {
        if (!u->is_string()) {
          warn("line " + std::to_string(lineno) + ": 'url' is not a string");
          continue;
        }
        url = u->get<std::string>();
      }
      batcher.push({html->get<std::string>(), std::move(url)});
    }
    if (in.bad()) throw SourceUnreadable("read error in corpus file: " + source.string());
  }
  batcher.flush();
  return summary;
}

inline std::vector<CorpusDoc> ingest_all(const std::filesystem::path& source, const IngestOptions& opt = {},
                                         IngestSummary* summary = nullptr) {
  std::vector<CorpusDoc> docs;
  auto s = ingest(source, opt, [&](CorpusDoc&& d) { docs.push_back(std::move(d)); });
  if (summary) *summary = std::move(s);
  return docs;
}

// Corpus store: JSONL, one CorpusDoc per line.
class CorpusWriter {
 public:
  explicit CorpusWriter(const std::filesystem::path& path) : out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) throw SourceUnreadable("cannot write corpus store: " + path.string());
  }
  void write(const CorpusDoc& d) { out_ << d.to_json().dump() << '\n'; }
  void close() {
    out_.flush();
    if (!out_) throw std::runtime_error("failed writing corpus store");
    out_.close();
  }

 private:
  std::ofstream out_;
};

template <class Fn>
std::size_t for_each_stored_doc(const std::filesystem::path& path, Fn&& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SourceUnreadable("cannot open corpus store: " + path.string());
  std::string line;
  std::size_t lineno = 0, n = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::trim_ascii(line).empty()) continue;
    const Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded())
      throw CorpusFormatError("corpus store line " + std::to_string(lineno) + " is not JSON");
    try {
      fn(CorpusDoc::from_json(j));
    } catch (const CorpusFormatError& e) {
      throw CorpusFormatError("corpus store line " + std::to_string(lineno) + ": " + e.what());
    }
    ++n;
  }
  return n;
}

// ---- length statistics ---------------------------------------------------

struct HistogramBucket {
  std::uint64_t lo = 0;
  std::optional<std::uint64_t> hi;  // exclusive; none for the open top bucket
  std::uint64_t count = 0;
  bool operator==(const HistogramBucket&) const = default;
};

struct LengthStats {
  std::uint64_t count = 0;
  double mean = 0;
  double median = 0;
  std::uint64_t p95 = 0;
  std::uint64_t max = 0;
  std::vector<HistogramBucket> histogram;

  Json to_json() const {
    Json hist = Json::array();
    for (const auto& b : histogram)
      hist.push_back({{"lo", b.lo}, {"hi", b.hi ? Json(*b.hi) : Json(nullptr)}, {"count", b.count}});
    return Json{{"unit", "estimated_tokens"}, {"count", count}, {"mean", mean}, {"median", median},
                {"p95", p95}, {"max", max}, {"histogram", hist}};
  }
};

// Bucket edges 0, 256, 512, ..., 1048576; the last bucket is open above.
inline std::vector<HistogramBucket> empty_length_histogram() {
  std::vector<HistogramBucket> h;
  h.push_back({0, 256, 0});
  for (std::uint64_t lo = 256; lo < (1u << 20); lo *= 2) h.push_back({lo, lo * 2, 0});
  h.push_back({1u << 20, std::nullopt, 0});
  return h;
}

inline std::size_t histogram_bucket_index(std::uint64_t v) {
  if (v < 256) return 0;
  if (v >= (1u << 20)) return 13;
  std::size_t i = 1;
  for (std::uint64_t lo = 512; v >= lo; lo *= 2) ++i;
  return i;
}

inline LengthStats length_stats(std::vector<std::uint64_t> counts) {
  LengthStats s;
  s.histogram = empty_length_histogram();
  s.count = counts.size();
  if (counts.empty()) return s;
  unsigned __int128 sum = 0;
  for (auto c : counts) {
    sum += c;
    ++s.histogram[histogram_bucket_index(c)].count;
  }
  // exact quotient plus rounded remainder keeps the error within one ulp
  const auto n = static_cast<unsigned __int128>(counts.size());
  s.mean = static_cast<double>(static_cast<long double>(sum / n) +
                               static_cast<long double>(sum % n) / static_cast<long double>(counts.size()));
  std::sort(counts.begin(), counts.end());
  const std::size_t m = counts.size();
  s.median = m % 2 ? static_cast<double>(counts[m / 2])
                   : (static_cast<double>(counts[m / 2 - 1]) + static_cast<double>(counts[m / 2])) / 2.0;
  const std::size_t rank = (95 * m + 99) / 100;  // nearest rank, ceil(0.95 m)
  s.p95 = counts[rank - 1];
  s.max = counts.back();
  return s;
}

// ---- curriculum ------------------------------------------------------------

struct CurriculumDoc {
  std::string doc_id;
  std::uint64_t token_count = 0;
};

struct CurriculumPlan {
  std::uint64_t max_len = 0;
  double long_fraction = 0.4;
  double achieved_fraction = 0;
  std::uint64_t seed = 0;
  std::size_t eligible = 0;
  std::size_t over_length = 0;
  std::vector<std::string> long_bucket;
  std::vector<std::string> short_bucket;
  std::vector<std::string> warnings;

  Json to_json() const {
    return Json{{"max_len", max_len}, {"long_fraction", long_fraction}, {"achieved_fraction", achieved_fraction},
                {"seed", seed}, {"eligible", eligible}, {"over_length", over_length},
                {"long_bucket", long_bucket}, {"short_bucket", short_bucket}, {"warnings", warnings}};
  }
};

// Long-eligible means token_count in (0.9 max_len, max_len].
inline bool curriculum_long_eligible(std::uint64_t tokens, std::uint64_t max_len) {
  return tokens <= max_len &&
         static_cast<unsigned __int128>(tokens) * 10 > static_cast<unsigned __int128>(max_len) * 9;
}

// Documents longer than max_len are left out. Of the rest, round(f * n) are
// sampled from the eligible band into the long bucket and all others go to
// the short bucket. Buckets list ids in corpus order.
inline CurriculumPlan plan_curriculum(const std::vector<CurriculumDoc>& corpus, std::uint64_t max_len,
                                      double long_fraction = 0.4, std::uint64_t seed = 0) {
  if (corpus.empty()) throw EmptyCorpus("curriculum needs a non-empty corpus");
  if (max_len == 0) throw std::invalid_argument("max_len must be positive");
  if (!(long_fraction >= 0.0 && long_fraction <= 1.0)) throw std::invalid_argument("long_fraction must be in [0, 1]");

  CurriculumPlan plan;
  plan.max_len = max_len;
  plan.long_fraction = long_fraction;
  plan.seed = seed;

  std::vector<const CurriculumDoc*> usable;
  std::unordered_set<std::string> seen;
  for (const auto& d : corpus) {
    if (!seen.insert(d.doc_id).second) continue;
    if (d.token_count > max_len) {
      ++plan.over_length;
      continue;
    }
    usable.push_back(&d);
  }
  if (usable.empty()) throw EmptyCorpus("no document fits within max_len");

  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < usable.size(); ++i)
    if (curriculum_long_eligible(usable[i]->token_count, max_len)) eligible.push_back(i);
  plan.eligible = eligible.size();

  const auto target = static_cast<std::size_t>(std::llround(long_fraction * static_cast<double>(usable.size())));
  std::vector<bool> is_long(usable.size(), false);
  if (eligible.size() <= target) {
    for (auto i : eligible) is_long[i] = true;
    if (eligible.size() < target)
      plan.warnings.push_back("only " + std::to_string(eligible.size()) + " long-eligible documents for a target of " +
                              std::to_string(target));
  } else {
    Rng rng(seed);
    for (auto k : rng.sample_indices(eligible.size(), target)) is_long[eligible[k]] = true;
  }
  for (std::size_t i = 0; i < usable.size(); ++i)
    (is_long[i] ? plan.long_bucket : plan.short_bucket).push_back(usable[i]->doc_id);
  plan.achieved_fraction = static_cast<double>(plan.long_bucket.size()) / static_cast<double>(usable.size());
  return plan;
}

}  // namespace readerkit
