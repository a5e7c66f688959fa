#include "triage/predictions.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <json.hpp>

#include "triage/errors.hpp"
#include "triage/text.hpp"

namespace triage {
namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail_row(const std::string& path, std::size_t row,
                           const std::string& what) {
  throw IoError(path + ":" + std::to_string(row) + ": " + what);
}

}  // namespace

PredictionSet predict_corpus(const Model& model, const Corpus& corpus,
                             std::size_t k) {
  PredictionSet preds;
  preds.model_id = model.fingerprint();
  preds.by_claim.reserve(corpus.size());
  for (const Claim& claim : corpus.claims) {
    const auto ranked = predict_topk(model, claim.text, k);
    std::vector<RankedPrediction> entry;
    entry.reserve(ranked.size());
    for (const auto& [class_id, prob] : ranked) {
      entry.push_back({class_id, prob});
    }
    preds.by_claim.emplace(claim.id, std::move(entry));
  }
  return preds;
}

PredictionSet import_predictions(const std::string& path,
                                 std::size_t num_classes, const Corpus* gold) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open predictions file: " + path);

  std::set<std::string> known_ids;
  if (gold != nullptr) {
    for (const Claim& claim : gold->claims) known_ids.insert(claim.id);
  }

  PredictionSet preds;
  std::uint64_t content_hash = kFnvOffset;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    content_hash = fnv1a64(line, content_hash);
    json record;
    try {
      record = json::parse(line);
    } catch (const json::exception& e) {
      fail_row(path, row, std::string("invalid JSON: ") + e.what());
    }
    if (!record.contains("claim_id") || !record["claim_id"].is_string())
      fail_row(path, row, "missing string field 'claim_id'");
    if (!record.contains("ranked") || !record["ranked"].is_array())
      fail_row(path, row, "missing array field 'ranked'");
    const std::string claim_id = record["claim_id"].get<std::string>();
    if (gold != nullptr && known_ids.count(claim_id) == 0)
      fail_row(path, row, "unknown claim id '" + claim_id + "'");
    if (preds.by_claim.count(claim_id) != 0)
      fail_row(path, row, "duplicate row for claim '" + claim_id + "'");

    std::vector<RankedPrediction> entry;
    std::set<int> seen_classes;
    double sum = 0.0;
    double prev = 1.0;
    for (const json& pair : record["ranked"]) {
      if (!pair.is_array() || pair.size() != 2 ||
          !pair[0].is_number_integer() || !pair[1].is_number())
        fail_row(path, row, "ranked entries must be [class, prob] pairs");
      const int class_id = pair[0].get<int>();
      const double prob = pair[1].get<double>();
      if (class_id < 0 || static_cast<std::size_t>(class_id) >= num_classes)
        fail_row(path, row, "class " + std::to_string(class_id) +
                                " outside label space of size " +
                                std::to_string(num_classes));
      if (!seen_classes.insert(class_id).second)
        fail_row(path, row,
                 "duplicate class " + std::to_string(class_id) + " in ranking");
      if (prob < 0.0 || prob > 1.0)
        fail_row(path, row, "probability outside [0,1]");
      if (prob > prev + 1e-12)
        fail_row(path, row, "probabilities must be non-increasing");
      prev = prob;
      sum += prob;
      entry.push_back({class_id, prob});
    }
    if (sum > 1.0 + 1e-6)
      fail_row(path, row, "probabilities sum to " + std::to_string(sum) +
                              ", expected <= 1");
    preds.by_claim.emplace(claim_id, std::move(entry));
  }
  preds.model_id = "import:" + to_hex(content_hash);
  return preds;
}

void write_predictions(const PredictionSet& preds, const std::string& path,
                       const Corpus* corpus) {
  std::vector<std::string> order;
  order.reserve(preds.by_claim.size());
  if (corpus != nullptr) {
    for (const Claim& claim : corpus->claims) {
      if (preds.by_claim.count(claim.id) != 0) order.push_back(claim.id);
    }
  } else {
    for (const auto& [id, entry] : preds.by_claim) order.push_back(id);
    std::sort(order.begin(), order.end());
  }

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write predictions file: " + path);
  for (const std::string& id : order) {
    ordered_json record;
    record["claim_id"] = id;
    auto& ranked = record["ranked"] = ordered_json::array();
    for (const RankedPrediction& p : preds.by_claim.at(id)) {
      ranked.push_back({p.class_id, p.prob});
    }
    out << record.dump() << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace triage
