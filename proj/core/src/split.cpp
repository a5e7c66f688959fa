#include "triage/split.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "triage/errors.hpp"
#include "triage/rng.hpp"

namespace triage {
namespace {

std::array<std::size_t, 3> apportion(std::size_t n,
                                     const std::array<double, 3>& fracs) {
  std::array<std::size_t, 3> sizes{};
  std::array<double, 3> remainders{};
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const double target = fracs[i] * static_cast<double>(n);
    sizes[i] = static_cast<std::size_t>(std::floor(target));
    remainders[i] = target - std::floor(target);
    assigned += sizes[i];
  }
  // Hand out the leftovers by largest remainder, ties in declaration order.
  while (assigned < n) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < 3; ++i) {
      if (remainders[i] > remainders[best]) best = i;
    }
    ++sizes[best];
    remainders[best] = -1.0;
    ++assigned;
  }
  return sizes;
}

Corpus take(const Corpus& corpus, const std::vector<std::size_t>& indices) {
  Corpus out;
  out.label_names = corpus.label_names;
  out.languages = corpus.languages;
  out.claims.reserve(indices.size());
  for (const std::size_t i : indices) out.claims.push_back(corpus.claims[i]);
  return out;
}

}  // namespace

void validate(const SplitSpec& spec) {
  if (spec.train_frac < 0.0 || spec.dev_frac < 0.0 || spec.test_frac < 0.0) {
    throw ConfigError("split spec: fractions must be non-negative");
  }
  const double sum = spec.train_frac + spec.dev_frac + spec.test_frac;
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ConfigError("split spec: fractions sum to " + std::to_string(sum) +
                      ", expected 1.0");
  }
}

SplitResult split(const Corpus& corpus, const SplitSpec& spec) {
  validate(spec);
  if (corpus.empty()) throw ConfigError("split: corpus is empty");

  const std::size_t n = corpus.size();
  const auto sizes =
      apportion(n, {spec.train_frac, spec.dev_frac, spec.test_frac});

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  Rng rng(mix_seed(spec.seed, 0x73706c6974ULL));
  rng.shuffle(order);

  // part[i]: 0 train, 1 dev, 2 test.
  std::vector<int> part(n, 2);
  for (std::size_t i = 0; i < sizes[0]; ++i) part[order[i]] = 0;
  for (std::size_t i = sizes[0]; i < sizes[0] + sizes[1]; ++i)
    part[order[i]] = 1;

  if (spec.stratified) {
    // Repair pass: every class with >= 3 instances must reach train. Sizes
    // are preserved by swapping with a train claim of a well-covered class.
    std::map<int, std::vector<std::size_t>> by_class;
    std::map<int, std::size_t> train_count;
    for (std::size_t i = 0; i < n; ++i) {
      by_class[corpus.claims[i].class_id].push_back(i);
      if (part[i] == 0) ++train_count[corpus.claims[i].class_id];
    }
    for (const auto& [class_id, members] : by_class) {
      if (members.size() < 3 || train_count[class_id] > 0) continue;
      const std::size_t incoming = members.front();
      // Donor: first train claim of the class with the most train instances.
      int donor_class = -1;
      std::size_t donor_count = 1;
      for (const auto& [cid, cnt] : train_count) {
        if (cnt > donor_count) {
          donor_class = cid;
          donor_count = cnt;
        }
      }
      if (donor_class < 0) continue;  // no class can spare an instance
      std::size_t donor = n;
      for (const std::size_t i : by_class[donor_class]) {
        if (part[i] == 0) {
          donor = i;
          break;
        }
      }
      if (donor == n) continue;
      std::swap(part[donor], part[incoming]);
      --train_count[donor_class];
      ++train_count[class_id];
    }
  }

  std::vector<std::size_t> train_idx, dev_idx, test_idx;
  train_idx.reserve(sizes[0]);
  dev_idx.reserve(sizes[1]);
  test_idx.reserve(sizes[2]);
  for (std::size_t i = 0; i < n; ++i) {
    if (part[i] == 0)
      train_idx.push_back(i);
    else if (part[i] == 1)
      dev_idx.push_back(i);
    else
      test_idx.push_back(i);
  }

  SplitResult result;
  result.train = take(corpus, train_idx);
  result.dev = take(corpus, dev_idx);
  result.test = take(corpus, test_idx);
  return result;
}

}  // namespace triage
