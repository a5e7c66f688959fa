#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "triage/claim.hpp"

namespace triage {

struct TrainConfig {
  std::size_t ngram_max = 2;  // word n-gram order
  // Optional char n-gram range [first, second] added per token, 0/0 = off.
  std::pair<std::size_t, std::size_t> char_ngram = {0, 0};
  std::size_t hash_buckets = std::size_t{1} << 20;
  std::size_t embed_dim = 64;
  std::size_t epochs = 5;
  double learning_rate = 0.1;  // linearly decayed to 0 over training
  std::uint64_t seed = 0;
};

void validate(const TrainConfig& config);

// Trained classifier state. ftx holds an averaged hashed-feature embedding
// layer and a softmax output layer; majority holds a single class.
struct Model {
  enum class Kind { majority, ftx };

  Kind kind = Kind::majority;
  std::size_t num_classes = 0;

  // majority
  int majority_class = -1;
  double majority_freq = 0.0;  // training frequency of the modal class

  // ftx: input_weights is hash_buckets x embed_dim, output_weights is
  // embed_dim x num_classes, both row-major.
  std::size_t hash_buckets = 0;
  std::size_t embed_dim = 0;
  std::vector<double> input_weights;
  std::vector<double> output_weights;

  TrainConfig config;
  std::string corpus_fingerprint;
  std::vector<double> epoch_losses;  // mean training cross-entropy per epoch

  std::string fingerprint() const;
};

// Feature ids for a text: word n-grams (n=1..ngram_max) hashed with 64-bit
// FNV-1a over the UTF-8 token bytes, tokens joined by 0x1f, reduced modulo
// hash_buckets. Optional char n-grams are hashed the same way with a 0x1e
// prefix so they cannot collide with word n-grams byte-wise.
std::vector<std::size_t> feature_buckets(std::string_view text,
                                         const TrainConfig& config);

// Modal class, ties to the smallest class id.
Model train_majority(const Corpus& train);

// Averaged-embedding linear softmax classifier trained with SGD on
// cross-entropy, linear learning-rate decay, deterministic per-epoch
// shuffling derived from the seed.
Model train_ftx(const Corpus& train, const TrainConfig& config);

// Full probability distribution over the label space.
std::vector<double> predict_dist(const Model& model, std::string_view text);

// min(k, num_classes) entries, probability descending, ties by class id.
std::vector<std::pair<int, double>> predict_topk(const Model& model,
                                                 std::string_view text,
                                                 std::size_t k);

// Average cross-entropy of the model on a corpus (used by trainers/tests).
double mean_cross_entropy(const Model& model, const Corpus& corpus);

// Analytic gradient of mean_cross_entropy with respect to output_weights
// (same row-major layout), for gradient checking.
std::vector<double> output_weight_gradient(const Model& model,
                                           const Corpus& corpus);

void save_model(const Model& model, const std::string& path);
Model load_model(const std::string& path);

}  // namespace triage
