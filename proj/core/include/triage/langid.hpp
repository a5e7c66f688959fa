#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "triage/claim.hpp"

namespace triage {

struct LangIdOptions {
  std::size_t ngram_min = 1;
  std::size_t ngram_max = 4;
  std::size_t profile_size = 300;  // n-grams kept per profile
  std::size_t min_samples = 20;    // claims needed to train a language
  double unk_margin = 0.05;        // below this confidence, report unk
  std::size_t min_chars = 8;       // informative characters needed
};

// Rank-order character n-gram profile of one language. ngrams[i] has rank
// i+1, so ranks are always the prefix 1..K.
struct LanguageProfile {
  std::string lang;
  std::vector<std::string> ngrams;
  std::uint64_t trained_on = 0;

  std::unordered_map<std::string, std::size_t> rank_index() const;
};

struct Detection {
  std::string lang = kUnkLang;
  double confidence = 0.0;  // normalized margin over the runner-up, [0,1]
};

// Lowercases, strips digit runs, punctuation and part-number-like tokens
// (mixed letters+digits), and rejoins with single spaces. Both training and
// detection see text through this.
std::string informative_text(std::string_view text);

// One profile per language holding at least min_samples labeled claims
// (unk-labeled claims never train). Order-invariant in the claims. Throws
// TrainError when no language qualifies.
std::vector<LanguageProfile> train_profiles(const Corpus& corpus,
                                            const LangIdOptions& options = {});

// Nearest profile by out-of-place rank distance. Returns unk when the text
// has fewer than min_chars informative characters (codes and part numbers
// defeat detection) or when the margin between the two best profiles is
// below unk_margin. Throws ConfigError on an empty profile list.
Detection detect(const std::vector<LanguageProfile>& profiles,
                 std::string_view text, const LangIdOptions& options = {});

// Versioned JSON ("langid-profiles-v1").
void save_profiles(const std::vector<LanguageProfile>& profiles,
                   const LangIdOptions& options, const std::string& path);
std::vector<LanguageProfile> load_profiles(const std::string& path,
                                           LangIdOptions* options = nullptr);

}  // namespace triage
