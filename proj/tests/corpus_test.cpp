#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "triage/errors.hpp"
#include "triage/generator.hpp"
#include "triage/text.hpp"

using namespace triage;

namespace {

CorpusConfig small_config(std::size_t samples, std::uint64_t seed) {
  CorpusConfig config;
  config.num_classes = 40;
  config.num_languages = 12;
  config.num_samples = samples;
  config.seed = seed;
  return config;
}

std::string serialize(const Corpus& corpus) {
  std::ostringstream out;
  for (const Claim& claim : corpus.claims) {
    out << claim.id << '\x1f' << claim.text << '\x1f' << claim.lang << '\x1f'
        << claim.group << '\x1f' << claim.class_id << '\n';
  }
  return out.str();
}

// Oracle for the boilerplate rate: exhaustive scan for any rendered
// boilerplate phrase as a token subsequence, over every language.
bool contains_boilerplate(const LexiconPack& pack, const std::string& text) {
  const std::vector<std::string> tokens = tokenize(text);
  for (std::size_t li = 0; li < pack.languages().size(); ++li) {
    for (const auto& phrase : pack.boilerplate_phrases()) {
      if (phrase.size() > tokens.size()) continue;
      for (std::size_t s = 0; s + phrase.size() <= tokens.size(); ++s) {
        bool match = true;
        for (std::size_t j = 0; j < phrase.size(); ++j) {
          if (tokens[s + j] != pack.render_word(li, phrase[j])) {
            match = false;
            break;
          }
        }
        if (match) return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("zero samples yields an empty corpus with intact label space") {
  CorpusConfig config = small_config(0, 1);
  const Corpus corpus = generate_corpus(config);
  CHECK(corpus.empty());
  CHECK(corpus.num_classes() == 40);
  CHECK(corpus.languages.size() == 12);
}

TEST_CASE("invalid configs name the offending field") {
  CorpusConfig config = small_config(10, 1);
  config.noise_phrase_rate = 1.5;
  CHECK_THROWS_WITH_AS(generate_corpus(config),
                       doctest::Contains("noise_phrase_rate"), ConfigError);
  config = small_config(10, 1);
  config.min_len_tokens = 0;
  CHECK_THROWS_AS(generate_corpus(config), ConfigError);
  config = small_config(10, 1);
  config.min_len_tokens = 5;
  config.max_len_tokens = 4;
  CHECK_THROWS_AS(generate_corpus(config), ConfigError);
}

TEST_CASE("generation is deterministic byte for byte") {
  const CorpusConfig config = small_config(2000, 99);
  const Corpus a = generate_corpus(config);
  const Corpus b = generate_corpus(config);
  CHECK(serialize(a) == serialize(b));

  CorpusConfig other = config;
  other.seed = 100;
  CHECK(serialize(generate_corpus(other)) != serialize(a));
}

TEST_CASE("top-10 language share lands near the configured mass") {
  CorpusConfig config;
  config.num_samples = 30000;
  config.seed = 7;
  const Corpus corpus = generate_corpus(config);
  std::map<std::string, std::size_t> counts;
  for (const Claim& claim : corpus.claims) ++counts[claim.lang];
  std::vector<std::size_t> sizes;
  for (const auto& [lang, n] : counts) sizes.push_back(n);
  std::sort(sizes.rbegin(), sizes.rend());
  std::size_t top10 = 0;
  for (std::size_t i = 0; i < 10 && i < sizes.size(); ++i) top10 += sizes[i];
  const double share = static_cast<double>(top10) / 30000.0;
  CHECK(share > 0.91);
  CHECK(share < 0.95);
}

TEST_CASE("boilerplate phrase rate verified by exhaustive scan") {
  CorpusConfig config = small_config(10000, 7);
  config.noise_phrase_rate = 0.07;
  const LexiconPack pack = build_lexicon(config);
  const Corpus corpus = generate_corpus(config, pack);
  std::size_t noisy = 0;
  for (const Claim& claim : corpus.claims) {
    if (contains_boilerplate(pack, claim.text)) ++noisy;
  }
  const double rate = static_cast<double>(noisy) / 10000.0;
  CHECK(rate > 0.06);
  CHECK(rate < 0.08);
}

TEST_CASE("class frequencies are right-skewed: mean support above median") {
  CorpusConfig config = small_config(20000, 3);
  config.class_skew = 0.9;
  const Corpus corpus = generate_corpus(config);
  std::vector<std::int64_t> supports = class_supports(corpus);
  std::sort(supports.begin(), supports.end());
  const double mean = 20000.0 / static_cast<double>(supports.size());
  const double median =
      static_cast<double>(supports[supports.size() / 2]);
  CHECK(mean > median);
  // Sorted class frequencies are trivially non-increasing after sorting;
  // the meaningful check is that the skew is material.
  CHECK(supports.back() > supports[supports.size() / 2] * 4);
}

TEST_CASE("language counts sum to corpus size and unk rate is honored") {
  CorpusConfig config = small_config(20000, 5);
  config.unk_lang_rate = 0.10;
  const Corpus corpus = generate_corpus(config);
  std::map<std::string, std::size_t> counts;
  for (const Claim& claim : corpus.claims) ++counts[claim.lang];
  std::size_t total = 0;
  for (const auto& [lang, n] : counts) total += n;
  CHECK(total == corpus.size());
  const double unk = static_cast<double>(counts[kUnkLang]) / 20000.0;
  CHECK(unk == doctest::Approx(0.10).epsilon(0.1));
}

TEST_CASE("claim fields satisfy the declared invariants") {
  CorpusConfig config = small_config(5000, 11);
  const Corpus corpus = generate_corpus(config);
  CHECK_NOTHROW(validate_corpus(corpus));
  std::set<std::string> inventory(corpus.languages.begin(),
                                  corpus.languages.end());
  for (const Claim& claim : corpus.claims) {
    const std::size_t tokens = tokenize(claim.text).size();
    CHECK(tokens >= 1);
    CHECK(tokens <= config.max_len_tokens);
    CHECK((claim.lang == kUnkLang || inventory.count(claim.lang) == 1));
  }
}

TEST_CASE("lexicon renderings are bijective per language") {
  const CorpusConfig config = small_config(0, 13);
  const LexiconPack pack = build_lexicon(config);
  for (std::size_t li = 0; li < pack.languages().size(); ++li) {
    std::set<std::string> seen;
    for (std::size_t wi = 0; wi < pack.pivot_vocab().size(); ++wi) {
      CHECK(seen.insert(pack.render_word(li, wi)).second);
    }
  }
}
