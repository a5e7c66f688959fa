#pragma once

#include <cstdint>
#include <string>

#include "triage/claim.hpp"
#include "triage/lexicon.hpp"

namespace triage {

// Knobs for the synthetic multilingual claims generator. Defaults reproduce
// the aggregate shape of a large industrial fault-report corpus: heavy class
// skew, top-10 languages carrying ~93% of the mass, ~7% boilerplate noise,
// ~5% untranslatable claims.
struct CorpusConfig {
  std::size_t num_classes = 1357;
  std::size_t num_languages = 38;
  std::size_t num_samples = 0;
  double class_skew = 0.7;  // Zipf exponent over class ranks
  double language_mass_top10 = 0.933;
  double noise_phrase_rate = 0.07;
  double unk_lang_rate = 0.05;
  double untranslatable_rate = 0.05;
  std::size_t max_len_tokens = 350;
  std::size_t min_len_tokens = 1;
  std::uint64_t seed = 0;
};

// Throws ConfigError naming the offending field.
void validate(const CorpusConfig& config);

// The lexicon pack implied by a config; pure function of the config.
LexiconPack build_lexicon(const CorpusConfig& config);

// Pure function of the config: same config, byte-identical corpus.
Corpus generate_corpus(const CorpusConfig& config);
Corpus generate_corpus(const CorpusConfig& config, const LexiconPack& lexicon);

}  // namespace triage
