#include <doctest.h>

#include <map>
#include <set>

#include "triage/errors.hpp"
#include "triage/generator.hpp"
#include "triage/split.hpp"

using namespace triage;

namespace {

Corpus numbered_corpus(std::size_t n, std::size_t num_classes) {
  Corpus corpus;
  corpus.label_names.assign(num_classes, "");
  for (std::size_t i = 0; i < n; ++i) {
    Claim claim;
    claim.id = "n" + std::to_string(i);
    claim.text = "token" + std::to_string(i);
    claim.class_id = static_cast<int>(i % num_classes);
    corpus.claims.push_back(std::move(claim));
  }
  return corpus;
}

std::set<std::string> ids_of(const Corpus& corpus) {
  std::set<std::string> ids;
  for (const Claim& claim : corpus.claims) ids.insert(claim.id);
  return ids;
}

}  // namespace

TEST_CASE("100 claims at 52/24/24 split exactly") {
  const Corpus corpus = numbered_corpus(100, 5);
  const SplitResult result = split(corpus, SplitSpec{});
  CHECK(result.train.size() == 52);
  CHECK(result.dev.size() == 24);
  CHECK(result.test.size() == 24);
}

TEST_CASE("split is deterministic for a fixed seed") {
  const Corpus corpus = numbered_corpus(101, 7);
  SplitSpec spec;
  spec.seed = 5;
  const SplitResult a = split(corpus, spec);
  const SplitResult b = split(corpus, spec);
  CHECK(ids_of(a.train) == ids_of(b.train));
  CHECK(ids_of(a.dev) == ids_of(b.dev));
  CHECK(ids_of(a.test) == ids_of(b.test));
}

TEST_CASE("split partitions the corpus for any seed") {
  const Corpus corpus = numbered_corpus(233, 11);
  for (const std::uint64_t seed : {0ULL, 1ULL, 17ULL, 123456ULL}) {
    SplitSpec spec;
    spec.seed = seed;
    const SplitResult result = split(corpus, spec);
    CHECK(result.train.size() + result.dev.size() + result.test.size() ==
          corpus.size());
    std::set<std::string> all = ids_of(result.train);
    for (const auto& id : ids_of(result.dev)) CHECK(all.insert(id).second);
    for (const auto& id : ids_of(result.test)) CHECK(all.insert(id).second);
    CHECK(all == ids_of(corpus));
    // sizes within one claim of the fractions
    CHECK(std::abs(static_cast<double>(result.train.size()) - 0.52 * 233.0) <=
          1.0);
    CHECK(std::abs(static_cast<double>(result.dev.size()) - 0.24 * 233.0) <=
          1.0);
  }
}

TEST_CASE("bad fractions are a configuration error") {
  SplitSpec spec;
  spec.train_frac = 0.6;
  CHECK_THROWS_AS(validate(spec), ConfigError);
  spec = SplitSpec{};
  spec.dev_frac = -0.1;
  spec.train_frac = 0.86;
  CHECK_THROWS_AS(validate(spec), ConfigError);
}

TEST_CASE("splitting an empty corpus fails") {
  Corpus corpus;
  corpus.label_names.assign(3, "");
  CHECK_THROWS_AS(split(corpus, SplitSpec{}), ConfigError);
}

TEST_CASE("stratified split covers every class with three or more claims") {
  // Oracle: membership check over all classes with >= 3 instances, across
  // many seeds.
  Corpus corpus;
  corpus.label_names.assign(30, "");
  std::size_t next_id = 0;
  auto add = [&](int class_id, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      Claim claim;
      claim.id = "s" + std::to_string(next_id++);
      claim.text = "text";
      claim.class_id = class_id;
      corpus.claims.push_back(std::move(claim));
    }
  };
  add(0, 200);
  for (int c = 1; c < 30; ++c) add(c, 3);

  for (const std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL, 5ULL, 30ULL}) {
    SplitSpec spec;
    spec.seed = seed;
    spec.stratified = true;
    const SplitResult result = split(corpus, spec);
    std::map<int, std::size_t> train_counts;
    for (const Claim& claim : result.train.claims) ++train_counts[claim.class_id];
    for (int c = 0; c < 30; ++c) {
      INFO("seed ", seed, " class ", c);
      CHECK(train_counts[c] >= 1);
    }
    // Sizes still exact.
    CHECK(result.train.size() + result.dev.size() + result.test.size() ==
          corpus.size());
    CHECK(std::abs(static_cast<double>(result.train.size()) -
                   0.52 * static_cast<double>(corpus.size())) <= 1.0);
  }
}
