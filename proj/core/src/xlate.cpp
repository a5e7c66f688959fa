#include "triage/xlate.hpp"

#include <algorithm>
#include <map>

#include "triage/errors.hpp"
#include "triage/text.hpp"

namespace triage {

LexiconTranslator::LexiconTranslator(LexiconPack pack)
    : pack_(std::move(pack)) {}

std::string LexiconTranslator::id() const {
  return "lexicon-mock/" + pack_.fingerprint();
}

TranslationResult LexiconTranslator::invert_with(
    std::size_t lang_index, const std::vector<std::string>& tokens) const {
  TranslationResult result;
  result.status = TranslationResult::Status::ok;
  result.source_lang = pack_.languages()[lang_index];
  std::string pivot;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) result.text += ' ';
    if (pack_.invert_token(lang_index, tokens[i], &pivot)) {
      result.text += pivot;
    } else {
      result.text += tokens[i];  // out-of-lexicon token passes through
    }
  }
  return result;
}

TranslationResult LexiconTranslator::translate(const Claim& claim) const {
  TranslationResult failed;
  failed.source_lang = claim.lang;
  if (pack_.untranslatable(claim.id)) return failed;

  const std::vector<std::string> tokens = tokenize(claim.text);
  if (tokens.empty()) return failed;

  const int known = claim.lang == kUnkLang ? -1 : pack_.language_index(claim.lang);
  if (known >= 0) {
    return invert_with(static_cast<std::size_t>(known), tokens);
  }

  // Unknown language: pick the lexicon that covers the text best.
  double best_coverage = 0.0;
  std::size_t best_index = 0;
  for (std::size_t li = 0; li < pack_.languages().size(); ++li) {
    const double c = pack_.coverage(li, tokens);
    if (c > best_coverage) {
      best_coverage = c;
      best_index = li;
    }
  }
  if (best_coverage < kMinCoverage) return failed;
  return invert_with(best_index, tokens);
}

std::string to_string(MissPolicy policy) {
  return policy == MissPolicy::drop ? "drop" : "fallback";
}

MissPolicy miss_policy_from_string(const std::string& name) {
  if (name == "drop") return MissPolicy::drop;
  if (name == "fallback") return MissPolicy::fallback;
  throw ConfigError("unknown translation miss policy '" + name +
                    "' (expected drop or fallback)");
}

TranslatedCorpus translate_corpus(const Corpus& corpus,
                                  const Translator& translator,
                                  MissPolicy policy) {
  TranslatedCorpus out;
  out.policy = policy;
  out.translator_id = translator.id();
  out.corpus.label_names = corpus.label_names;

  std::size_t ok_count = 0;
  for (const Claim& claim : corpus.claims) {
    const TranslationResult result = translator.translate(claim);
    if (result.ok()) {
      ++ok_count;
      Claim translated = claim;
      translated.text = result.text;
      translated.lang = "en";
      out.corpus.claims.push_back(std::move(translated));
    } else if (policy == MissPolicy::fallback) {
      out.corpus.claims.push_back(claim);
      out.fallback_ids.push_back(claim.id);
    }
  }
  out.coverage = corpus.empty()
                     ? 1.0
                     : static_cast<double>(ok_count) /
                           static_cast<double>(corpus.size());

  // Rebuild the language inventory from what actually survived.
  std::map<std::string, std::int64_t> counts;
  for (const Claim& claim : out.corpus.claims) {
    if (claim.lang != kUnkLang) ++counts[claim.lang];
  }
  std::vector<std::pair<std::string, std::int64_t>> ranked(counts.begin(),
                                                           counts.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) {
                     if (a.second != b.second) return a.second > b.second;
                     return a.first < b.first;
                   });
  for (const auto& [code, n] : ranked) out.corpus.languages.push_back(code);
  return out;
}

}  // namespace triage
