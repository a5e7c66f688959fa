#include "triage/langid.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include <json.hpp>

#include "triage/errors.hpp"
#include "triage/text.hpp"

namespace triage {
namespace {

using nlohmann::json;

// UTF-8 code point boundaries, so multi-byte letters stay whole inside an
// n-gram (and profiles remain valid UTF-8 for serialization).
std::vector<std::string_view> codepoints(std::string_view text) {
  std::vector<std::string_view> units;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= text.size(); ++i) {
    if (i == text.size() ||
        (static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
      units.push_back(text.substr(start, i - start));
      start = i;
    }
  }
  return units;
}

void count_ngrams(std::string_view text, const LangIdOptions& options,
                  std::unordered_map<std::string, std::int64_t>& counts) {
  const std::vector<std::string_view> units = codepoints(text);
  for (std::size_t n = options.ngram_min; n <= options.ngram_max; ++n) {
    if (units.size() < n) break;
    for (std::size_t i = 0; i + n <= units.size(); ++i) {
      std::string gram;
      for (std::size_t j = 0; j < n; ++j) gram.append(units[i + j]);
      ++counts[std::move(gram)];
    }
  }
}

// Top-K by count, ties broken lexicographically; insertion order never
// matters, so retraining on a shuffled corpus gives identical profiles.
std::vector<std::string> top_ngrams(
    const std::unordered_map<std::string, std::int64_t>& counts,
    std::size_t limit) {
  std::vector<std::pair<std::string, std::int64_t>> ranked(counts.begin(),
                                                           counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.size() > limit) ranked.resize(limit);
  std::vector<std::string> out;
  out.reserve(ranked.size());
  for (auto& [gram, count] : ranked) out.push_back(std::move(gram));
  return out;
}

std::size_t informative_char_count(std::string_view normalized) {
  std::size_t count = 0;
  for (const std::string_view unit : codepoints(normalized)) {
    if (unit != " ") ++count;
  }
  return count;
}

}  // namespace

std::unordered_map<std::string, std::size_t> LanguageProfile::rank_index()
    const {
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(ngrams.size());
  for (std::size_t i = 0; i < ngrams.size(); ++i) index.emplace(ngrams[i], i + 1);
  return index;
}

std::string informative_text(std::string_view text) {
  std::string out;
  for (const std::string& token : tokenize(text)) {
    if (is_digits_only(token) || is_code_like(token)) continue;
    if (!out.empty()) out += ' ';
    out += token;
  }
  return out;
}

std::vector<LanguageProfile> train_profiles(const Corpus& corpus,
                                            const LangIdOptions& options) {
  std::map<std::string, std::uint64_t> sample_counts;
  std::map<std::string, std::unordered_map<std::string, std::int64_t>> grams;
  for (const Claim& claim : corpus.claims) {
    if (claim.lang == kUnkLang) continue;
    ++sample_counts[claim.lang];
    count_ngrams(informative_text(claim.text), options, grams[claim.lang]);
  }

  std::vector<LanguageProfile> profiles;
  for (const auto& [lang, count] : sample_counts) {
    if (count < options.min_samples) continue;
    LanguageProfile profile;
    profile.lang = lang;
    profile.trained_on = count;
    profile.ngrams = top_ngrams(grams[lang], options.profile_size);
    profiles.push_back(std::move(profile));
  }
  if (profiles.empty()) {
    throw TrainError("langid: no language has at least " +
                     std::to_string(options.min_samples) + " labeled claims");
  }
  return profiles;
}

Detection detect(const std::vector<LanguageProfile>& profiles,
                 std::string_view text, const LangIdOptions& options) {
  if (profiles.empty()) throw ConfigError("langid: no profiles");

  Detection result;
  const std::string normalized = informative_text(text);
  if (informative_char_count(normalized) < options.min_chars) {
    return result;  // unk, confidence 0
  }

  std::unordered_map<std::string, std::int64_t> counts;
  count_ngrams(normalized, options, counts);
  const std::vector<std::string> text_profile =
      top_ngrams(counts, options.profile_size);
  if (text_profile.empty()) return result;

  const std::int64_t penalty =
      static_cast<std::int64_t>(options.profile_size);
  std::int64_t best = -1, second = -1;
  std::size_t best_index = 0;
  for (std::size_t p = 0; p < profiles.size(); ++p) {
    const auto ranks = profiles[p].rank_index();
    std::int64_t distance = 0;
    for (std::size_t i = 0; i < text_profile.size(); ++i) {
      const auto it = ranks.find(text_profile[i]);
      if (it == ranks.end()) {
        distance += penalty;
      } else {
        const std::int64_t text_rank = static_cast<std::int64_t>(i + 1);
        const std::int64_t lang_rank = static_cast<std::int64_t>(it->second);
        distance += std::abs(text_rank - lang_rank);
      }
    }
    if (best < 0 || distance < best) {
      second = best;
      best = distance;
      best_index = p;
    } else if (second < 0 || distance < second) {
      second = distance;
    }
  }

  double confidence = 1.0;
  if (second >= 0) {
    confidence = second > 0
                     ? static_cast<double>(second - best) /
                           static_cast<double>(second)
                     : 0.0;
  }
  confidence = std::clamp(confidence, 0.0, 1.0);
  if (confidence < options.unk_margin) {
    result.confidence = confidence;
    return result;  // unk: margin too thin
  }
  result.lang = profiles[best_index].lang;
  result.confidence = confidence;
  return result;
}

void save_profiles(const std::vector<LanguageProfile>& profiles,
                   const LangIdOptions& options, const std::string& path) {
  nlohmann::ordered_json doc;
  doc["schema"] = "langid-profiles-v1";
  doc["options"] = {{"ngram_min", options.ngram_min},
                    {"ngram_max", options.ngram_max},
                    {"profile_size", options.profile_size},
                    {"min_samples", options.min_samples},
                    {"unk_margin", options.unk_margin},
                    {"min_chars", options.min_chars}};
  auto& list = doc["profiles"] = nlohmann::ordered_json::array();
  for (const LanguageProfile& profile : profiles) {
    list.push_back({{"lang", profile.lang},
                    {"trained_on", profile.trained_on},
                    {"ngrams", profile.ngrams}});
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write langid profiles: " + path);
  out << doc.dump(2) << '\n';
}

std::vector<LanguageProfile> load_profiles(const std::string& path,
                                           LangIdOptions* options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read langid profiles: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw IoError("malformed langid profiles " + path + ": " + e.what());
  }
  if (doc.value("schema", "") != "langid-profiles-v1") {
    throw IoError("unsupported langid profile schema in " + path);
  }
  if (options != nullptr) {
    const json& o = doc.at("options");
    options->ngram_min = o.at("ngram_min").get<std::size_t>();
    options->ngram_max = o.at("ngram_max").get<std::size_t>();
    options->profile_size = o.at("profile_size").get<std::size_t>();
    options->min_samples = o.at("min_samples").get<std::size_t>();
    options->unk_margin = o.at("unk_margin").get<double>();
    options->min_chars = o.at("min_chars").get<std::size_t>();
  }
  std::vector<LanguageProfile> profiles;
  for (const json& entry : doc.at("profiles")) {
    LanguageProfile profile;
    profile.lang = entry.at("lang").get<std::string>();
    profile.trained_on = entry.at("trained_on").get<std::uint64_t>();
    profile.ngrams = entry.at("ngrams").get<std::vector<std::string>>();
    profiles.push_back(std::move(profile));
  }
  return profiles;
}

}  // namespace triage
