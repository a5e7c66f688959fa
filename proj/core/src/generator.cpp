#include "triage/generator.hpp"

#include <cmath>
#include <cstdio>

#include "triage/errors.hpp"
#include "triage/rng.hpp"
#include "triage/text.hpp"

namespace triage {
namespace {

void check_fraction(double value, const char* field) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ConfigError(std::string("corpus config: ") + field +
                      " must be in [0,1], got " + std::to_string(value));
  }
}

// Per-language probabilities, rank order. Built in two tiers so that the
// ten most frequent observed buckets (including the unk bucket when it is
// large enough to rank) carry language_mass_top10 of the samples.
std::vector<double> language_probs(const CorpusConfig& config) {
  const std::size_t n = config.num_languages;
  std::vector<double> probs(n, 0.0);
  const double mass = config.language_mass_top10;
  const double u = config.unk_lang_rate;

  auto zipf_weights = [](std::size_t first_rank, std::size_t count) {
    std::vector<double> w(count);
    for (std::size_t i = 0; i < count; ++i) {
      w[i] = 1.0 / static_cast<double>(first_rank + i);
    }
    return w;
  };

  auto fill_two_tier = [&](std::size_t head, double head_mass) {
    const std::vector<double> hw = zipf_weights(1, head);
    const std::vector<double> tw = zipf_weights(head + 1, n - head);
    double hsum = 0.0, tsum = 0.0;
    for (const double w : hw) hsum += w;
    for (const double w : tw) tsum += w;
    for (std::size_t i = 0; i < head; ++i)
      probs[i] = head_mass * hw[i] / hsum;
    for (std::size_t i = head; i < n; ++i)
      probs[i] = (1.0 - head_mass) * tw[i - head] / tsum;
  };

  if (n <= 10) {
    const std::vector<double> w = zipf_weights(1, n);
    double sum = 0.0;
    for (const double x : w) sum += x;
    for (std::size_t i = 0; i < n; ++i) probs[i] = w[i] / sum;
    return probs;
  }

  // Head of ten languages unless the unk bucket displaces the tenth.
  const double a10 = mass / (1.0 - u);
  if (a10 <= 1.0) {
    fill_two_tier(10, a10);
    const double q10 = (1.0 - u) * probs[9];
    if (u <= q10) return probs;
  }
  const double a9 = (mass - u) / (1.0 - u);
  if (a9 > 0.0 && a9 <= 1.0) {
    fill_two_tier(9, a9);
    return probs;
  }
  // Degenerate targets; fall back to a plain Zipf ramp.
  const std::vector<double> w = zipf_weights(1, n);
  double sum = 0.0;
  for (const double x : w) sum += x;
  for (std::size_t i = 0; i < n; ++i) probs[i] = w[i] / sum;
  return probs;
}

std::vector<double> length_weights(std::size_t min_len, std::size_t max_len) {
  // Log-normal shape: median around 9 tokens, occasional very long claims.
  const double mu = std::log(9.0);
  const double sigma = 0.9;
  std::vector<double> w;
  w.reserve(max_len - min_len + 1);
  for (std::size_t len = min_len; len <= max_len; ++len) {
    const double x = static_cast<double>(len);
    const double z = (std::log(x) - mu) / sigma;
    w.push_back(std::exp(-0.5 * z * z) / x);
  }
  return w;
}

}  // namespace

void validate(const CorpusConfig& config) {
  if (config.num_classes < 1) {
    throw ConfigError("corpus config: num_classes must be >= 1");
  }
  if (config.num_languages < 1) {
    throw ConfigError("corpus config: num_languages must be >= 1");
  }
  if (config.min_len_tokens < 1) {
    throw ConfigError("corpus config: min_len_tokens must be >= 1");
  }
  if (config.min_len_tokens > config.max_len_tokens) {
    throw ConfigError(
        "corpus config: min_len_tokens must be <= max_len_tokens");
  }
  if (config.class_skew < 0.0) {
    throw ConfigError("corpus config: class_skew must be >= 0");
  }
  check_fraction(config.language_mass_top10, "language_mass_top10");
  check_fraction(config.noise_phrase_rate, "noise_phrase_rate");
  check_fraction(config.unk_lang_rate, "unk_lang_rate");
  check_fraction(config.untranslatable_rate, "untranslatable_rate");
}

LexiconPack build_lexicon(const CorpusConfig& config) {
  validate(config);
  return LexiconPack::build(config.num_languages, 2 * config.num_classes,
                            config.untranslatable_rate, config.seed);
}

Corpus generate_corpus(const CorpusConfig& config) {
  return generate_corpus(config, build_lexicon(config));
}

Corpus generate_corpus(const CorpusConfig& config, const LexiconPack& lexicon) {
  validate(config);

  Corpus corpus;
  corpus.languages = lexicon.languages();
  corpus.label_names.reserve(config.num_classes);

  // A class is named after its first dedicated signal word.
  const std::size_t signal_base = lexicon.first_signal_word();
  for (std::size_t c = 0; c < config.num_classes; ++c) {
    corpus.label_names.push_back(lexicon.pivot_vocab()[signal_base + 2 * c]);
  }
  if (config.num_samples == 0) return corpus;

  // Class frequency ranks are a seeded permutation of the class ids, so the
  // most frequent class is not simply id 0.
  std::vector<std::size_t> class_of_rank(config.num_classes);
  for (std::size_t i = 0; i < config.num_classes; ++i) class_of_rank[i] = i;
  {
    Rng perm_rng(mix_seed(config.seed, 0x72616e6bULL));
    perm_rng.shuffle(class_of_rank);
  }

  std::vector<double> class_weights(config.num_classes);
  for (std::size_t r = 0; r < config.num_classes; ++r) {
    class_weights[r] =
        std::pow(static_cast<double>(r + 1), -config.class_skew);
  }
  const DiscreteSampler class_sampler(class_weights);
  const DiscreteSampler lang_sampler(language_probs(config));
  const DiscreteSampler len_sampler(
      length_weights(config.min_len_tokens, config.max_len_tokens));

  // Per-class vocabulary: two dedicated signal words plus six words from the
  // shared pool.
  const std::size_t shared_base = lexicon.boilerplate_word_count();
  const std::size_t shared_count = lexicon.shared_word_count();
  constexpr std::size_t kSharedPerClass = 6;
  std::vector<std::size_t> class_shared(config.num_classes * kSharedPerClass);
  for (std::size_t c = 0; c < config.num_classes; ++c) {
    Rng vocab_rng(mix_seed(config.seed, 0xc1a55000ULL + c));
    for (std::size_t j = 0; j < kSharedPerClass; ++j) {
      class_shared[c * kSharedPerClass + j] =
          shared_base + vocab_rng.next_index(shared_count);
    }
  }

  const int num_groups =
      static_cast<int>(std::min<std::size_t>(16, config.num_classes));

  Rng rng(mix_seed(config.seed, 0x67656e00ULL));
  corpus.claims.reserve(config.num_samples);
  std::vector<std::size_t> tokens;
  char id_buf[32];

  for (std::size_t i = 0; i < config.num_samples; ++i) {
    Claim claim;
    std::snprintf(id_buf, sizeof(id_buf), "c%07zu", i);
    claim.id = id_buf;

    const std::size_t rank = class_sampler.sample(rng);
    const std::size_t class_id = class_of_rank[rank];
    claim.class_id = static_cast<int>(class_id);
    claim.group = static_cast<int>(class_id * num_groups / config.num_classes);

    const std::size_t lang_index = lang_sampler.sample(rng);
    const bool unk = rng.next_bernoulli(config.unk_lang_rate);
    claim.lang = unk ? kUnkLang : lexicon.languages()[lang_index];

    std::size_t body_len = config.min_len_tokens + len_sampler.sample(rng);
    tokens.clear();
    const bool noisy = rng.next_bernoulli(config.noise_phrase_rate);
    if (noisy) {
      const auto& phrases = lexicon.boilerplate_phrases();
      const auto& phrase = phrases[rng.next_index(phrases.size())];
      tokens.insert(tokens.end(), phrase.begin(), phrase.end());
      // Keep the total token count inside the configured bound.
      const std::size_t budget =
          config.max_len_tokens > phrase.size()
              ? config.max_len_tokens - phrase.size()
              : 1;
      body_len = std::min(body_len, budget);
    }
    for (std::size_t t = 0; t < body_len; ++t) {
      if (rng.next_bernoulli(0.45)) {
        tokens.push_back(signal_base + 2 * class_id + rng.next_index(2));
      } else {
        tokens.push_back(
            class_shared[class_id * kSharedPerClass + rng.next_index(kSharedPerClass)]);
      }
    }
    claim.text = lexicon.render(lang_index, tokens);
    corpus.claims.push_back(std::move(claim));
  }
  return corpus;
}

}  // namespace triage
