#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "triage/claim.hpp"

namespace triage {

// Descriptive statistics of a claims corpus: language histogram, class
// histogram, unique classes per language, and class overlap between the
// three most frequent languages.
struct StatsReport {
  std::map<std::string, std::int64_t> language_histogram;  // unk is a bucket
  std::map<int, std::int64_t> class_histogram;             // observed classes
  std::map<std::string, std::int64_t> classes_per_language;

  struct Overlap {
    std::vector<std::string> languages;  // top-3 by sample count, unk excluded
    std::map<std::string, std::int64_t> pair_counts;  // key "a|b"
    std::int64_t triple = 0;
  };
  Overlap class_overlap;
};

StatsReport corpus_stats(const Corpus& corpus);

// Fixed-schema JSON (keys language_histogram, class_histogram,
// classes_per_language, class_overlap).
std::string stats_to_json(const StatsReport& report);

}  // namespace triage
