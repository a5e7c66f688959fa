#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace triage {

// Deterministic random source. std::mt19937_64 output is bit-exact per the
// standard, but the std distributions are not, so all draws are derived here
// by hand. Everything downstream (corpora, splits, plans, training order)
// must route its randomness through this class.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double next_double() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1]; safe for log().
  double next_double_pos() {
    return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound). bound must be >= 1. Unbiased via rejection.
  std::uint64_t next_index(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = eng_();
      if (r >= threshold) return r % bound;
    }
  }

  bool next_bernoulli(double p) { return next_double() < p; }

  // Fisher-Yates, back to front.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(next_index(i));
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

// Splitmix64 step, used to derive independent seed streams from one seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Samples indices from a fixed discrete distribution via its cumulative
// table. Construction normalizes the weights; draws are a binary search.
class DiscreteSampler {
 public:
  explicit DiscreteSampler(const std::vector<double>& weights);

  std::size_t sample(Rng& rng) const;
  std::size_t size() const { return cumulative_.size(); }
  // Normalized probability of index i.
  double prob(std::size_t i) const;

 private:
  std::vector<double> cumulative_;
};

}  // namespace triage
