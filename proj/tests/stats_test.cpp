#include <doctest.h>

#include "test_support.hpp"
#include "triage/stats.hpp"

using namespace triage;
using triage::testing::make_corpus;

TEST_CASE("class histogram counts directly") {
  const Corpus corpus = make_corpus({{"a", "x", "en", 5},
                                     {"b", "x", "en", 5},
                                     {"c", "x", "en", 16}},
                                    17);
  const StatsReport report = corpus_stats(corpus);
  CHECK(report.class_histogram.at(5) == 2);
  CHECK(report.class_histogram.at(16) == 1);
  CHECK(report.class_histogram.size() == 2);
}

TEST_CASE("classes per language and pairwise overlap") {
  const Corpus corpus = make_corpus({{"a", "x", "en", 1},
                                     {"b", "x", "en", 2},
                                     {"c", "x", "de", 2}});
  const StatsReport report = corpus_stats(corpus);
  CHECK(report.classes_per_language.at("en") == 2);
  CHECK(report.classes_per_language.at("de") == 1);
  // Oracle: {1,2} ∩ {2} = {2}
  CHECK(report.class_overlap.pair_counts.at("en|de") == 1);
}

TEST_CASE("empty corpus gives empty histograms") {
  Corpus corpus;
  const StatsReport report = corpus_stats(corpus);
  CHECK(report.language_histogram.empty());
  CHECK(report.class_histogram.empty());
  CHECK(report.classes_per_language.empty());
  CHECK(report.class_overlap.languages.empty());
}

TEST_CASE("language histogram sums to corpus size and includes unk") {
  const Corpus corpus = make_corpus({{"a", "x", "en", 0},
                                     {"b", "x", "unk", 0},
                                     {"c", "x", "de", 1},
                                     {"d", "x", "de", 1}});
  const StatsReport report = corpus_stats(corpus);
  std::int64_t total = 0;
  for (const auto& [lang, count] : report.language_histogram) total += count;
  CHECK(total == 4);
  CHECK(report.language_histogram.at("unk") == 1);
  // unk never takes part in the top-3 overlap selection
  for (const auto& lang : report.class_overlap.languages) {
    CHECK(lang != "unk");
  }
}

TEST_CASE("triple overlap for three languages") {
  const Corpus corpus = make_corpus({{"a", "x", "pt", 1},
                                     {"b", "x", "pt", 2},
                                     {"c", "x", "de", 1},
                                     {"d", "x", "de", 3},
                                     {"e", "x", "en", 1},
                                     {"f", "x", "en", 2},
                                     {"g", "x", "en", 3}});
  const StatsReport report = corpus_stats(corpus);
  REQUIRE(report.class_overlap.languages.size() == 3);
  // en has 3 samples, pt and de 2 each -> order en, de, pt (ties alphabetic)
  CHECK(report.class_overlap.languages[0] == "en");
  // Oracle by set intersection: classes en={1,2,3}, de={1,3}, pt={1,2}
  CHECK(report.class_overlap.pair_counts.at("en|de") == 2);
  CHECK(report.class_overlap.pair_counts.at("en|pt") == 2);
  CHECK(report.class_overlap.pair_counts.at("de|pt") == 1);
  CHECK(report.class_overlap.triple == 1);
}

TEST_CASE("stats serialize with the fixed key names") {
  const Corpus corpus = make_corpus({{"a", "x", "en", 0}});
  const std::string json = stats_to_json(corpus_stats(corpus));
  CHECK(json.find("\"language_histogram\"") != std::string::npos);
  CHECK(json.find("\"class_histogram\"") != std::string::npos);
  CHECK(json.find("\"classes_per_language\"") != std::string::npos);
  CHECK(json.find("\"class_overlap\"") != std::string::npos);
}
