#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace triage {

// Deterministic word-level lexicons for a set of synthetic languages.
//
// Every language renders the same English pivot vocabulary through its own
// bijective token map, so the class signal survives rendering and a
// translator can invert it token-exactly. "en" renders as the identity.
// Per-language renderings use distinct letter inventories, which gives each
// language a recognizable character distribution.
class LexiconPack {
 public:
  // num_signal_words is the number of class-signal pivot words to
  // provision beyond the built-in shared and boilerplate words.
  static LexiconPack build(std::size_t num_languages,
                           std::size_t num_signal_words,
                           double untranslatable_rate, std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  double untranslatable_rate() const { return untranslatable_rate_; }

  const std::vector<std::string>& languages() const { return languages_; }
  const std::vector<std::string>& pivot_vocab() const { return pivot_vocab_; }

  // Pivot word index ranges by role.
  std::size_t boilerplate_word_count() const { return boilerplate_words_; }
  std::size_t shared_word_count() const { return shared_words_; }
  std::size_t first_signal_word() const {
    return boilerplate_words_ + shared_words_;
  }

  // Boilerplate phrases as lists of pivot-word indices.
  const std::vector<std::vector<std::size_t>>& boilerplate_phrases() const {
    return boilerplate_phrases_;
  }

  const std::string& render_word(std::size_t lang_index,
                                 std::size_t word_index) const {
    return renderings_[lang_index][word_index];
  }

  // Space-joined rendering of a pivot word-index sequence.
  std::string render(std::size_t lang_index,
                     const std::vector<std::size_t>& word_indices) const;

  // Inverse lookup: rendered token -> pivot token. Digit-only tokens pass
  // through unchanged. Returns false when the token is not in the lexicon.
  bool invert_token(std::size_t lang_index, std::string_view token,
                    std::string* pivot) const;

  // Fraction of this language's lexicon that covers the given tokens.
  double coverage(std::size_t lang_index,
                  const std::vector<std::string>& tokens) const;

  // Index of a language code, or -1.
  int language_index(std::string_view code) const;

  // Claims are marked untranslatable at generation time by a pure function
  // of (pack seed, claim id), so the flag survives serialization.
  bool untranslatable(std::string_view claim_id) const;

  std::string fingerprint() const;

  void save(const std::string& path) const;
  static LexiconPack load(const std::string& path);

 private:
  LexiconPack() = default;
  void build_inverse_maps();

  std::uint64_t seed_ = 0;
  double untranslatable_rate_ = 0.0;
  std::size_t boilerplate_words_ = 0;
  std::size_t shared_words_ = 0;
  std::vector<std::string> languages_;
  std::vector<std::string> pivot_vocab_;
  std::vector<std::vector<std::string>> renderings_;  // [lang][word]
  std::vector<std::vector<std::size_t>> boilerplate_phrases_;
  std::vector<std::unordered_map<std::string, std::size_t>> inverse_;
};

}  // namespace triage
