#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "triage/claim.hpp"
#include "triage/clf.hpp"

namespace triage {

struct RankedPrediction {
  int class_id;
  double prob;
};

// Ranked per-claim predictions, either produced by a model or imported from
// an external system's file.
struct PredictionSet {
  std::string model_id;
  std::unordered_map<std::string, std::vector<RankedPrediction>> by_claim;

  const std::vector<RankedPrediction>* find(const std::string& claim_id) const {
    const auto it = by_claim.find(claim_id);
    return it == by_claim.end() ? nullptr : &it->second;
  }
};

// Runs the model over every claim, keeping the top k entries each.
PredictionSet predict_corpus(const Model& model, const Corpus& corpus,
                             std::size_t k);

// JSONL rows {"claim_id": ..., "ranked": [[class, prob], ...]}. Rows must
// reference known claim ids (when gold is given) and class ids inside the
// label space; probabilities must be in [0,1], non-increasing, and sum to
// at most 1 + 1e-6. Violations throw IoError with the row number.
PredictionSet import_predictions(const std::string& path,
                                 std::size_t num_classes,
                                 const Corpus* gold = nullptr);

// Inverse of import_predictions; rows in corpus order when corpus given,
// otherwise sorted by claim id.
void write_predictions(const PredictionSet& preds, const std::string& path,
                       const Corpus* corpus = nullptr);

}  // namespace triage
