#pragma once

// Language identification: the dominant script decides when a script maps to
// one language; Latin and Cyrillic text is scored with character-trigram
// naive Bayes against profiles built from the bundled seed text.

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <unicode/uchar.h>
#include <unicode/uscript.h>

#include "detail/lang_seeds.hpp"
#include "detail/text.hpp"
#include "html.hpp"

namespace readerkit {

inline constexpr std::string_view kUndetermined = "und";
inline constexpr std::size_t kMinLanguageChars = 40;

// The 29 languages of the base model family, as ISO-639-1 codes.
inline const std::set<std::string>& default_allowed_languages() {
  static const std::set<std::string> codes = {"ar", "cs", "da", "de", "el", "en", "es", "fi", "fr", "he",
                                              "hi", "hu", "id", "it", "ja", "ko", "ms", "nl", "no", "pl",
                                              "pt", "ro", "ru", "sv", "th", "tr", "uk", "vi", "zh"};
  return codes;
}

struct LanguageDecision {
  std::string lang;
  bool keep = false;
  bool operator==(const LanguageDecision&) const = default;
};

namespace langid_detail {

enum class ScriptGroup { Latin, Cyrillic, Other };

inline ScriptGroup group_of(char32_t cp) {
  UErrorCode err = U_ZERO_ERROR;
  const UScriptCode sc = uscript_getScript(static_cast<UChar32>(cp), &err);
  if (U_FAILURE(err)) return ScriptGroup::Other;
  if (sc == USCRIPT_LATIN) return ScriptGroup::Latin;
  if (sc == USCRIPT_CYRILLIC) return ScriptGroup::Cyrillic;
  return ScriptGroup::Other;
}

// Lowercased letters of one script group; everything else becomes a single
// space so that trigrams see word boundaries.
inline std::u32string letters_of(std::u32string_view text, ScriptGroup group) {
  std::u32string out = U" ";
  for (char32_t cp : text) {
    if (u_isalpha(static_cast<UChar32>(cp)) && group_of(cp) == group) {
      out.push_back(static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp))));
    } else if (out.back() != U' ') {
      out.push_back(U' ');
    }
  }
  if (out.back() != U' ') out.push_back(U' ');
  return out;
}

template <class Fn>
void for_each_trigram(const std::u32string& s, Fn&& fn) {
  for (std::size_t i = 0; i + 3 <= s.size(); ++i) {
    if (s[i + 1] == U' ') continue;  // no trigram spans a whole gap
    fn(std::u32string_view(s).substr(i, 3));
  }
}

struct Profile {
  std::string code;
  ScriptGroup group = ScriptGroup::Latin;
  std::unordered_map<std::u32string, double> counts;
  double total = 0;
};

struct Model {
  std::vector<Profile> profiles;
  std::map<ScriptGroup, std::size_t> vocabulary;  // distinct trigrams per group
};

inline constexpr double kSmoothing = 1.0;

inline const Model& model() {
  static const Model m = [] {
    Model built;
    std::map<ScriptGroup, std::set<std::u32string>> vocab;
    for (const auto& seed : detail::kLangSeeds) {
      const std::u32string cps = detail::to_code_points(seed.text);
      std::size_t latin = 0, cyrillic = 0;
      for (char32_t cp : cps) {
        const ScriptGroup g = group_of(cp);
        latin += g == ScriptGroup::Latin;
        cyrillic += g == ScriptGroup::Cyrillic;
      }
      Profile p;
      p.code = std::string(seed.code);
      p.group = cyrillic > latin ? ScriptGroup::Cyrillic : ScriptGroup::Latin;
      for_each_trigram(letters_of(cps, p.group), [&](std::u32string_view t) {
        p.counts[std::u32string(t)] += 1;
        p.total += 1;
        vocab[p.group].emplace(t);
      });
      built.profiles.push_back(std::move(p));
    }
    for (const auto& [g, set] : vocab) built.vocabulary[g] = set.size();
    return built;
  }();
  return m;
}

inline std::string classify_trigrams(std::u32string_view text, ScriptGroup group) {
  const Model& m = model();
  std::map<std::u32string, double> doc;
  for_each_trigram(letters_of(text, group), [&](std::u32string_view t) { doc[std::u32string(t)] += 1; });
  if (doc.empty()) return std::string(kUndetermined);
  const double v = static_cast<double>(m.vocabulary.at(group));
  std::string best(kUndetermined);
  double best_score = -INFINITY;
  for (const auto& p : m.profiles) {
    if (p.group != group) continue;
    const double denom = std::log(p.total + kSmoothing * v);
    double score = 0;
    for (const auto& [tri, n] : doc) {
      const auto it = p.counts.find(tri);
      score += n * (std::log((it == p.counts.end() ? 0.0 : it->second) + kSmoothing) - denom);
    }
    if (score > best_score) {
      best_score = score;
      best = p.code;
    }
  }
  return best;
}

}  // namespace langid_detail

// Language of plain text; "und" below the length floor or for scripts the
// model does not know.
inline std::string detect_text_language(std::string_view text) {
  using langid_detail::ScriptGroup;
  const std::u32string cps = detail::to_code_points(detail::trim_ascii(text));
  if (cps.size() < kMinLanguageChars) return std::string(kUndetermined);

  std::map<UScriptCode, std::size_t> letters;
  for (char32_t cp : cps) {
    if (!u_isalpha(static_cast<UChar32>(cp))) continue;
    UErrorCode err = U_ZERO_ERROR;
    const UScriptCode sc = uscript_getScript(static_cast<UChar32>(cp), &err);
    if (U_SUCCESS(err)) ++letters[sc];
  }
  auto count = [&](UScriptCode sc) {
    const auto it = letters.find(sc);
    return it == letters.end() ? std::size_t{0} : it->second;
  };
  // Japanese text mixes kana with Han; treat the two as one contender.
  const std::size_t kana = count(USCRIPT_HIRAGANA) + count(USCRIPT_KATAKANA);
  const std::size_t cjk = kana + count(USCRIPT_HAN);

  UScriptCode top = USCRIPT_INVALID_CODE;
  std::size_t top_n = 0;
  for (const auto& [sc, n] : letters) {
    if (sc == USCRIPT_HAN || sc == USCRIPT_HIRAGANA || sc == USCRIPT_KATAKANA) continue;
    if (n > top_n) top = sc, top_n = n;
  }
  if (cjk > top_n) return kana * 10 >= cjk ? "ja" : "zh";
  if (top_n == 0) return std::string(kUndetermined);

  switch (top) {
    case USCRIPT_LATIN: return langid_detail::classify_trigrams(cps, ScriptGroup::Latin);
    case USCRIPT_CYRILLIC: return langid_detail::classify_trigrams(cps, ScriptGroup::Cyrillic);
    case USCRIPT_HANGUL: return "ko";
    case USCRIPT_THAI: return "th";
    case USCRIPT_ARABIC: return "ar";
    case USCRIPT_HEBREW: return "he";
    case USCRIPT_GREEK: return "el";
    case USCRIPT_DEVANAGARI: return "hi";
    default: return std::string(kUndetermined);
  }
}

inline LanguageDecision detect_language(std::string_view html, const std::set<std::string>& allowed) {
  LanguageDecision d;
  d.lang = detect_text_language(inner_text(parse_html(html)));
  d.keep = d.lang != kUndetermined && allowed.count(d.lang) > 0;
  return d;
}

inline LanguageDecision detect_language(std::string_view html) {
  return detect_language(html, default_allowed_languages());
}

}  // namespace readerkit
