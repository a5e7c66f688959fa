#include "triage/claim.hpp"

#include <unordered_set>

#include "triage/errors.hpp"
#include "triage/text.hpp"

namespace triage {

void validate_corpus(const Corpus& corpus) {
  std::unordered_set<std::string> seen;
  seen.reserve(corpus.claims.size());
  for (const Claim& claim : corpus.claims) {
    if (trim(claim.text).empty()) {
      throw ConfigError("claim '" + claim.id + "': text is blank");
    }
    if (claim.class_id < 0 ||
        static_cast<std::size_t>(claim.class_id) >= corpus.num_classes()) {
      throw ConfigError("claim '" + claim.id + "': class " +
                        std::to_string(claim.class_id) +
                        " outside label space of size " +
                        std::to_string(corpus.num_classes()));
    }
    if (!seen.insert(claim.id).second) {
      throw ConfigError("duplicate claim id '" + claim.id + "'");
    }
  }
}

std::vector<std::int64_t> class_supports(const Corpus& corpus) {
  std::vector<std::int64_t> supports(corpus.num_classes(), 0);
  for (const Claim& claim : corpus.claims) {
    if (claim.class_id >= 0 &&
        static_cast<std::size_t>(claim.class_id) < supports.size()) {
      ++supports[static_cast<std::size_t>(claim.class_id)];
    }
  }
  return supports;
}

std::string corpus_fingerprint(const Corpus& corpus) {
  std::uint64_t h = kFnvOffset;
  for (const Claim& claim : corpus.claims) {
    h = fnv1a64(claim.id, h);
    h = fnv1a64("\x1f", h);
    h = fnv1a64(claim.text, h);
    h = fnv1a64("\x1f", h);
    h = fnv1a64(claim.lang, h);
    h = fnv1a64("\x1f", h);
    h = fnv1a64(std::to_string(claim.group), h);
    h = fnv1a64("\x1f", h);
    h = fnv1a64(std::to_string(claim.class_id), h);
    h = fnv1a64("\x1e", h);
  }
  h = fnv1a64(std::to_string(corpus.num_classes()), h);
  return to_hex(h);
}

}  // namespace triage
