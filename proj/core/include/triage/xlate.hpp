#pragma once

#include <memory>
#include <string>
#include <vector>

#include "triage/claim.hpp"
#include "triage/lexicon.hpp"

namespace triage {

struct TranslationResult {
  enum class Status { ok, failed };
  Status status = Status::failed;
  std::string text;                   // English text, present iff ok
  std::string source_lang = kUnkLang; // language the text was read as

  bool ok() const { return status == Status::ok; }
};

// Adapter seam: anything that maps a claim to English. A real service
// client can be dropped in here; its id() lands in report provenance.
class Translator {
 public:
  virtual ~Translator() = default;
  virtual TranslationResult translate(const Claim& claim) const = 0;
  virtual std::string id() const = 0;
};

// Deterministic mock translator that inverts the generator's lexicons
// token by token, recovering the English pivot exactly. Claims marked
// untranslatable by the pack report failed, never throw. Claims labeled
// unk (or with a code the pack does not know) are matched against all
// lexicons by token coverage first.
class LexiconTranslator : public Translator {
 public:
  explicit LexiconTranslator(LexiconPack pack);

  TranslationResult translate(const Claim& claim) const override;
  std::string id() const override;

  const LexiconPack& pack() const { return pack_; }

 private:
  TranslationResult invert_with(std::size_t lang_index,
                                const std::vector<std::string>& tokens) const;

  LexiconPack pack_;
  // A lexicon must cover at least this share of tokens to be accepted when
  // the claim's language is unknown.
  static constexpr double kMinCoverage = 0.5;
};

// What to do with claims whose translation failed.
enum class MissPolicy { drop, fallback };

std::string to_string(MissPolicy policy);
MissPolicy miss_policy_from_string(const std::string& name);

struct TranslatedCorpus {
  Corpus corpus;
  double coverage = 1.0;  // translated / total, exactly
  MissPolicy policy = MissPolicy::drop;
  std::vector<std::string> fallback_ids;  // claims passed through unchanged
  std::string translator_id;
};

// policy=drop keeps only translated claims; policy=fallback passes failed
// claims through with their original text (and lists them as fallbacks).
TranslatedCorpus translate_corpus(const Corpus& corpus,
                                  const Translator& translator,
                                  MissPolicy policy);

}  // namespace triage
