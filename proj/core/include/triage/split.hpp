#pragma once

#include <cstdint>

#include "triage/claim.hpp"

namespace triage {

struct SplitSpec {
  double train_frac = 0.52;
  double dev_frac = 0.24;
  double test_frac = 0.24;
  std::uint64_t seed = 0;
  bool stratified = false;
};

// Throws ConfigError when the fractions do not sum to 1 (1e-9) or are
// negative.
void validate(const SplitSpec& spec);

struct SplitResult {
  Corpus train;
  Corpus dev;
  Corpus test;
};

// Disjoint partition covering every claim; split sizes within one claim of
// fraction * total (largest-remainder apportionment). Deterministic under
// (corpus, spec). With stratified=true every class holding at least three
// instances is guaranteed a training instance.
SplitResult split(const Corpus& corpus, const SplitSpec& spec);

}  // namespace triage
