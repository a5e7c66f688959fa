#include "triage/clf.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <set>

#include <json.hpp>

#include "triage/errors.hpp"
#include "triage/rng.hpp"
#include "triage/text.hpp"

namespace triage {
namespace {

using nlohmann::json;

constexpr char kWordSep = '\x1f';
constexpr char kCharMark = '\x1e';

void softmax_inplace(std::vector<double>& logits) {
  double max_logit = logits.empty() ? 0.0 : logits[0];
  for (const double z : logits) max_logit = std::max(max_logit, z);
  double sum = 0.0;
  for (double& z : logits) {
    z = std::exp(z - max_logit);
    sum += z;
  }
  for (double& z : logits) z /= sum;
}

std::vector<double> hidden_state(const Model& model,
                                 const std::vector<std::size_t>& features) {
  std::vector<double> hidden(model.embed_dim, 0.0);
  if (features.empty()) return hidden;
  for (const std::size_t f : features) {
    const double* row = &model.input_weights[f * model.embed_dim];
    for (std::size_t d = 0; d < model.embed_dim; ++d) hidden[d] += row[d];
  }
  const double inv = 1.0 / static_cast<double>(features.size());
  for (double& h : hidden) h *= inv;
  return hidden;
}

std::vector<double> logits_from_hidden(const Model& model,
                                       const std::vector<double>& hidden) {
  std::vector<double> logits(model.num_classes, 0.0);
  for (std::size_t d = 0; d < model.embed_dim; ++d) {
    const double h = hidden[d];
    if (h == 0.0) continue;
    const double* row = &model.output_weights[d * model.num_classes];
    for (std::size_t c = 0; c < model.num_classes; ++c) logits[c] += h * row[c];
  }
  return logits;
}

}  // namespace

void validate(const TrainConfig& config) {
  if (config.hash_buckets < 1)
    throw ConfigError("train config: hash_buckets must be >= 1");
  if (config.embed_dim < 1)
    throw ConfigError("train config: embed_dim must be >= 1");
  if (config.epochs < 1) throw ConfigError("train config: epochs must be >= 1");
  if (!(config.learning_rate > 0.0))
    throw ConfigError("train config: learning_rate must be > 0");
  if (config.ngram_max < 1)
    throw ConfigError("train config: ngram_max must be >= 1");
  if (config.char_ngram.first > config.char_ngram.second)
    throw ConfigError("train config: char_ngram range is inverted");
}

std::vector<std::size_t> feature_buckets(std::string_view text,
                                         const TrainConfig& config) {
  const std::vector<std::string> tokens = tokenize(text);
  std::vector<std::size_t> features;
  features.reserve(tokens.size() * config.ngram_max);
  for (std::size_t n = 1; n <= config.ngram_max; ++n) {
    if (tokens.size() < n) break;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
      std::uint64_t h = kFnvOffset;
      for (std::size_t j = 0; j < n; ++j) {
        if (j > 0) h = fnv1a64(std::string_view(&kWordSep, 1), h);
        h = fnv1a64(tokens[i + j], h);
      }
      features.push_back(static_cast<std::size_t>(h % config.hash_buckets));
    }
  }
  const auto [char_lo, char_hi] = config.char_ngram;
  if (char_lo >= 1) {
    for (const std::string& token : tokens) {
      for (std::size_t n = char_lo; n <= char_hi && n <= token.size(); ++n) {
        for (std::size_t i = 0; i + n <= token.size(); ++i) {
          std::uint64_t h = fnv1a64(std::string_view(&kCharMark, 1));
          h = fnv1a64(std::string_view(token).substr(i, n), h);
          features.push_back(static_cast<std::size_t>(h % config.hash_buckets));
        }
      }
    }
  }
  return features;
}

Model train_majority(const Corpus& train) {
  if (train.empty()) throw TrainError("majority: training corpus is empty");
  std::vector<std::int64_t> supports = class_supports(train);
  int best = 0;
  for (int c = 1; c < static_cast<int>(supports.size()); ++c) {
    if (supports[c] > supports[best]) best = c;  // ties keep the smaller id
  }
  Model model;
  model.kind = Model::Kind::majority;
  model.num_classes = train.num_classes();
  model.majority_class = best;
  model.majority_freq = static_cast<double>(supports[best]) /
                        static_cast<double>(train.size());
  model.corpus_fingerprint = corpus_fingerprint(train);
  return model;
}

Model train_ftx(const Corpus& train, const TrainConfig& config) {
  validate(config);
  if (train.empty()) throw TrainError("ftx: training corpus is empty");
  std::set<int> distinct;
  for (const Claim& claim : train.claims) distinct.insert(claim.class_id);
  if (distinct.size() < 2) {
    throw TrainError("ftx: need at least 2 classes, got " +
                     std::to_string(distinct.size()));
  }

  Model model;
  model.kind = Model::Kind::ftx;
  model.num_classes = train.num_classes();
  model.hash_buckets = config.hash_buckets;
  model.embed_dim = config.embed_dim;
  model.config = config;
  model.corpus_fingerprint = corpus_fingerprint(train);

  Rng init_rng(mix_seed(config.seed, 0x696e6974ULL));
  model.input_weights.resize(config.hash_buckets * config.embed_dim);
  const double scale = 1.0 / static_cast<double>(config.embed_dim);
  for (double& w : model.input_weights) {
    w = (2.0 * init_rng.next_double() - 1.0) * scale;
  }
  model.output_weights.assign(config.embed_dim * model.num_classes, 0.0);

  // Features are fixed per claim; extract once.
  const std::size_t n = train.size();
  std::vector<std::vector<std::size_t>> features(n);
  for (std::size_t i = 0; i < n; ++i) {
    features[i] = feature_buckets(train.claims[i].text, config);
  }

  const double total_updates = static_cast<double>(config.epochs * n);
  std::size_t step = 0;
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::vector<double> grad_hidden(config.embed_dim);

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    Rng epoch_rng(mix_seed(config.seed, 0x65700000ULL + epoch));
    epoch_rng.shuffle(order);
    double epoch_loss = 0.0;

    for (const std::size_t i : order) {
      const double lr =
          config.learning_rate *
          (1.0 - static_cast<double>(step) / total_updates);
      ++step;

      const auto& f = features[i];
      const int gold = train.claims[i].class_id;
      std::vector<double> hidden = hidden_state(model, f);
      std::vector<double> probs = logits_from_hidden(model, hidden);
      softmax_inplace(probs);
      epoch_loss -= std::log(std::max(probs[static_cast<std::size_t>(gold)],
                                      1e-300));

      // dL/dlogit = p - onehot(gold)
      probs[static_cast<std::size_t>(gold)] -= 1.0;

      // Backprop into the hidden state, then update the output layer.
      std::fill(grad_hidden.begin(), grad_hidden.end(), 0.0);
      for (std::size_t d = 0; d < config.embed_dim; ++d) {
        double* row = &model.output_weights[d * model.num_classes];
        const double h = hidden[d];
        double acc = 0.0;
        for (std::size_t c = 0; c < model.num_classes; ++c) {
          acc += row[c] * probs[c];
          row[c] -= lr * h * probs[c];
        }
        grad_hidden[d] = acc;
      }
      if (!f.empty()) {
        const double inv = lr / static_cast<double>(f.size());
        for (const std::size_t bucket : f) {
          double* row = &model.input_weights[bucket * config.embed_dim];
          for (std::size_t d = 0; d < config.embed_dim; ++d) {
            row[d] -= inv * grad_hidden[d];
          }
        }
      }
    }
    epoch_loss /= static_cast<double>(n);
    if (!std::isfinite(epoch_loss)) {
      throw TrainError("ftx: non-finite loss at epoch " +
                       std::to_string(epoch));
    }
    model.epoch_losses.push_back(epoch_loss);
  }
  return model;
}

std::vector<double> predict_dist(const Model& model, std::string_view text) {
  if (model.kind == Model::Kind::majority) {
    std::vector<double> dist(model.num_classes, 0.0);
    if (model.num_classes == 1) {
      dist[0] = 1.0;
      return dist;
    }
    const double rest =
        (1.0 - model.majority_freq) / static_cast<double>(model.num_classes - 1);
    for (double& p : dist) p = rest;
    dist[static_cast<std::size_t>(model.majority_class)] = model.majority_freq;
    return dist;
  }
  const std::vector<std::size_t> features = feature_buckets(text, model.config);
  std::vector<double> probs =
      logits_from_hidden(model, hidden_state(model, features));
  softmax_inplace(probs);
  return probs;
}

std::vector<std::pair<int, double>> predict_topk(const Model& model,
                                                 std::string_view text,
                                                 std::size_t k) {
  if (k < 1) throw ConfigError("predict_topk: k must be >= 1");
  const std::vector<double> dist = predict_dist(model, text);
  std::vector<int> ids(dist.size());
  for (std::size_t c = 0; c < dist.size(); ++c) ids[c] = static_cast<int>(c);
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    if (dist[static_cast<std::size_t>(a)] != dist[static_cast<std::size_t>(b)])
      return dist[static_cast<std::size_t>(a)] >
             dist[static_cast<std::size_t>(b)];
    return a < b;
  });
  const std::size_t take = std::min(k, dist.size());
  std::vector<std::pair<int, double>> out;
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    out.emplace_back(ids[i], dist[static_cast<std::size_t>(ids[i])]);
  }
  return out;
}

double mean_cross_entropy(const Model& model, const Corpus& corpus) {
  if (corpus.empty()) return 0.0;
  double loss = 0.0;
  for (const Claim& claim : corpus.claims) {
    const std::vector<double> dist = predict_dist(model, claim.text);
    loss -= std::log(
        std::max(dist[static_cast<std::size_t>(claim.class_id)], 1e-300));
  }
  return loss / static_cast<double>(corpus.size());
}

std::vector<double> output_weight_gradient(const Model& model,
                                           const Corpus& corpus) {
  std::vector<double> grad(model.output_weights.size(), 0.0);
  if (corpus.empty()) return grad;
  const double inv_n = 1.0 / static_cast<double>(corpus.size());
  for (const Claim& claim : corpus.claims) {
    const auto features = feature_buckets(claim.text, model.config);
    const std::vector<double> hidden = hidden_state(model, features);
    std::vector<double> probs = logits_from_hidden(model, hidden);
    softmax_inplace(probs);
    probs[static_cast<std::size_t>(claim.class_id)] -= 1.0;
    for (std::size_t d = 0; d < model.embed_dim; ++d) {
      const double h = hidden[d];
      if (h == 0.0) continue;
      double* row = &grad[d * model.num_classes];
      for (std::size_t c = 0; c < model.num_classes; ++c) {
        row[c] += inv_n * h * probs[c];
      }
    }
  }
  return grad;
}

std::string Model::fingerprint() const {
  std::uint64_t h = fnv1a64(kind == Kind::majority ? "majority" : "ftx");
  h = fnv1a64(std::to_string(num_classes), h);
  h = fnv1a64(std::to_string(majority_class), h);
  h = fnv1a64(corpus_fingerprint, h);
  h = fnv1a64(std::to_string(config.seed), h);
  auto hash_doubles = [&h](const std::vector<double>& values) {
    for (const double v : values) {
      std::uint64_t bits;
      static_assert(sizeof(bits) == sizeof(v));
      std::memcpy(&bits, &v, sizeof(bits));
      h ^= bits;
      h *= kFnvPrime;
    }
  };
  hash_doubles(input_weights);
  hash_doubles(output_weights);
  return to_hex(h);
}

void save_model(const Model& model, const std::string& path) {
  json header;
  header["kind"] = model.kind == Model::Kind::majority ? "majority" : "ftx";
  header["num_classes"] = model.num_classes;
  header["majority_class"] = model.majority_class;
  header["majority_freq"] = model.majority_freq;
  header["hash_buckets"] = model.hash_buckets;
  header["embed_dim"] = model.embed_dim;
  header["ngram_max"] = model.config.ngram_max;
  header["char_ngram"] = {model.config.char_ngram.first,
                          model.config.char_ngram.second};
  header["epochs"] = model.config.epochs;
  header["learning_rate"] = model.config.learning_rate;
  header["seed"] = model.config.seed;
  header["corpus_fingerprint"] = model.corpus_fingerprint;
  header["epoch_losses"] = model.epoch_losses;
  header["input_weights"] = model.input_weights.size();
  header["output_weights"] = model.output_weights.size();

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write model file: " + path);
  out << "ftx-model-v1\n" << header.dump() << "\n";
  auto write_doubles = [&out](const std::vector<double>& values) {
    if (!values.empty()) {
      out.write(reinterpret_cast<const char*>(values.data()),
                static_cast<std::streamsize>(values.size() * sizeof(double)));
    }
  };
  write_doubles(model.input_weights);
  write_doubles(model.output_weights);
  if (!out) throw IoError("write failed: " + path);
}

Model load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read model file: " + path);
  std::string magic;
  std::getline(in, magic);
  if (magic != "ftx-model-v1") {
    throw IoError(path + ": unsupported model format (expected ftx-model-v1)");
  }
  std::string header_line;
  std::getline(in, header_line);
  json header;
  try {
    header = json::parse(header_line);
  } catch (const json::exception& e) {
    throw IoError(path + ": malformed model header: " + e.what());
  }
  Model model;
  model.kind = header.at("kind").get<std::string>() == "majority"
                   ? Model::Kind::majority
                   : Model::Kind::ftx;
  model.num_classes = header.at("num_classes").get<std::size_t>();
  model.majority_class = header.at("majority_class").get<int>();
  model.majority_freq = header.at("majority_freq").get<double>();
  model.hash_buckets = header.at("hash_buckets").get<std::size_t>();
  model.embed_dim = header.at("embed_dim").get<std::size_t>();
  model.config.ngram_max = header.at("ngram_max").get<std::size_t>();
  const auto char_range = header.at("char_ngram").get<std::vector<std::size_t>>();
  model.config.char_ngram = {char_range.at(0), char_range.at(1)};
  model.config.epochs = header.at("epochs").get<std::size_t>();
  model.config.learning_rate = header.at("learning_rate").get<double>();
  model.config.seed = header.at("seed").get<std::uint64_t>();
  model.config.hash_buckets = model.hash_buckets ? model.hash_buckets : 1;
  model.config.embed_dim = model.embed_dim ? model.embed_dim : 1;
  model.corpus_fingerprint =
      header.at("corpus_fingerprint").get<std::string>();
  if (header.contains("epoch_losses")) {
    model.epoch_losses = header["epoch_losses"].get<std::vector<double>>();
  }

  auto read_doubles = [&in, &path](std::size_t count) {
    std::vector<double> values(count);
    if (count > 0) {
      in.read(reinterpret_cast<char*>(values.data()),
              static_cast<std::streamsize>(count * sizeof(double)));
      if (!in) throw IoError(path + ": truncated weight blob");
    }
    return values;
  };
  model.input_weights = read_doubles(header.at("input_weights").get<std::size_t>());
  model.output_weights =
      read_doubles(header.at("output_weights").get<std::size_t>());
  for (const double w : model.input_weights) {
    if (!std::isfinite(w)) throw IoError(path + ": non-finite weight");
  }
  for (const double w : model.output_weights) {
    if (!std::isfinite(w)) throw IoError(path + ": non-finite weight");
  }
  return model;
}

}  // namespace triage
