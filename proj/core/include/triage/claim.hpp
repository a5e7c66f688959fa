#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace triage {

// Language code used when no language could be attached to a claim.
inline constexpr const char* kUnkLang = "unk";

// One fault report: free text plus its manually assigned labels.
struct Claim {
  std::string id;
  std::string text;
  std::string lang = kUnkLang;  // BCP-47-like code, or kUnkLang
  int group = 0;                // coarse taxonomy segment
  int class_id = 0;             // root-cause class, index into the label space
  // Set on oversampling duplicates; points at the claim that was copied.
  std::optional<std::string> source_id;
};

// Immutable once built. label_names defines the label space: class ids are
// indices into it (names may be empty strings when unknown).
struct Corpus {
  std::vector<Claim> claims;
  std::vector<std::string> label_names;
  std::vector<std::string> languages;  // inventory, most frequent first

  std::size_t size() const { return claims.size(); }
  std::size_t num_classes() const { return label_names.size(); }
  bool empty() const { return claims.empty(); }
};

// Checks the claim-level invariants (non-blank text, class id in range,
// unique ids). Throws ConfigError naming the offending claim.
void validate_corpus(const Corpus& corpus);

// Per-class instance counts over the label space (length = num_classes).
std::vector<std::int64_t> class_supports(const Corpus& corpus);

// Stable content fingerprint (fnv over ids, texts and labels), used to tie
// models, plans and reports back to their inputs.
std::string corpus_fingerprint(const Corpus& corpus);

}  // namespace triage
