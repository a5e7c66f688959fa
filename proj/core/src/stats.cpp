#include "triage/stats.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace triage {

StatsReport corpus_stats(const Corpus& corpus) {
  StatsReport report;
  std::map<std::string, std::set<int>> classes_by_lang;
  for (const Claim& claim : corpus.claims) {
    ++report.language_histogram[claim.lang];
    ++report.class_histogram[claim.class_id];
    classes_by_lang[claim.lang].insert(claim.class_id);
  }
  for (const auto& [lang, classes] : classes_by_lang) {
    report.classes_per_language[lang] =
        static_cast<std::int64_t>(classes.size());
  }

  // Top-3 real languages by count (unk is a detection artifact, not a
  // language, so it does not take part in the overlap figure).
  std::vector<std::pair<std::string, std::int64_t>> ranked;
  for (const auto& [lang, count] : report.language_histogram) {
    if (lang != kUnkLang) ranked.emplace_back(lang, count);
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) {
                     if (a.second != b.second) return a.second > b.second;
                     return a.first < b.first;
                   });
  const std::size_t top = std::min<std::size_t>(3, ranked.size());
  for (std::size_t i = 0; i < top; ++i) {
    report.class_overlap.languages.push_back(ranked[i].first);
  }
  const auto& langs = report.class_overlap.languages;
  auto intersect = [&](const std::set<int>& a,
                       const std::set<int>& b) -> std::set<int> {
    std::set<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.begin()));
    return out;
  };
  for (std::size_t i = 0; i < langs.size(); ++i) {
    for (std::size_t j = i + 1; j < langs.size(); ++j) {
      const auto both =
          intersect(classes_by_lang[langs[i]], classes_by_lang[langs[j]]);
      report.class_overlap.pair_counts[langs[i] + "|" + langs[j]] =
          static_cast<std::int64_t>(both.size());
    }
  }
  if (langs.size() == 3) {
    auto both = intersect(classes_by_lang[langs[0]], classes_by_lang[langs[1]]);
    both = intersect(both, classes_by_lang[langs[2]]);
    report.class_overlap.triple = static_cast<std::int64_t>(both.size());
  }
  return report;
}

std::string stats_to_json(const StatsReport& report) {
  nlohmann::ordered_json doc;
  doc["schema"] = "stats-report-v1";
  doc["language_histogram"] = nlohmann::ordered_json::object();
  for (const auto& [lang, count] : report.language_histogram) {
    doc["language_histogram"][lang] = count;
  }
  doc["class_histogram"] = nlohmann::ordered_json::object();
  for (const auto& [class_id, count] : report.class_histogram) {
    doc["class_histogram"][std::to_string(class_id)] = count;
  }
  doc["classes_per_language"] = nlohmann::ordered_json::object();
  for (const auto& [lang, count] : report.classes_per_language) {
    doc["classes_per_language"][lang] = count;
  }
  nlohmann::ordered_json overlap;
  overlap["languages"] = report.class_overlap.languages;
  overlap["pairs"] = nlohmann::ordered_json::object();
  for (const auto& [key, count] : report.class_overlap.pair_counts) {
    overlap["pairs"][key] = count;
  }
  overlap["triple"] = report.class_overlap.triple;
  doc["class_overlap"] = overlap;
  return doc.dump(2) + "\n";
}

}  // namespace triage
