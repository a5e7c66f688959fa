#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "triage/claim.hpp"
#include "triage/predictions.hpp"

namespace triage {

enum class Zone { low, mid, top };
const char* to_string(Zone zone);

// Class-support segmentation at the 25%/75% cumulative-mass cut points.
// Classes are sorted by support ascending; the low zone grows from the
// bottom and the top zone from the top while each stays within a quarter of
// the instance mass. A class straddling a cut point falls to mid, so
// low_mass and top_mass are <= 0.25, short by at most the boundary class
// (recorded as boundary_delta).
struct ZoneMap {
  std::vector<Zone> zone_of;  // indexed by class id
  std::size_t low_classes = 0;
  std::size_t mid_classes = 0;
  std::size_t top_classes = 0;
  double low_mass = 0.0;
  double mid_mass = 0.0;
  double top_mass = 0.0;
  double low_threshold = 0.25;
  double top_threshold = 0.75;
  double boundary_delta = 0.0;
  std::string source_fingerprint;

  Zone zone(int class_id) const {
    return zone_of[static_cast<std::size_t>(class_id)];
  }
  std::string fingerprint() const;
};

ZoneMap compute_zones(const Corpus& train);

// Accounting for claims without predictions: either they stay in the
// denominator as misses, or the denominator shrinks to the covered claims.
enum class CoveragePolicy { count_missing_as_wrong, ignore_missing };
const char* to_string(CoveragePolicy policy);

struct PrfStats {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t classes = 0;  // classes contributing to the macro average
};

struct ConfusionMatrix {
  std::vector<int> classes;  // the N most frequent gold classes
  // rows follow `classes`; columns are `classes` plus a final aggregate
  // column for predictions outside the matrix.
  std::vector<std::vector<std::int64_t>> matrix;
};

struct EvalReport {
  std::map<std::size_t, double> total_topk;
  std::map<std::string, std::map<std::size_t, double>> zone_topk;
  std::map<std::string, double> per_language;
  std::map<std::string, std::size_t> per_language_counts;
  std::map<std::string, PrfStats> zone_prf;
  ConfusionMatrix confusion;

  // Per-class top-1 counts over the evaluated split (dense, label space).
  std::vector<std::int64_t> class_tp;
  std::vector<std::int64_t> class_fp;
  std::vector<std::int64_t> class_fn;

  std::map<std::string, std::size_t> zone_counts;  // gold claims per zone
  std::size_t total_claims = 0;
  std::size_t evaluated_claims = 0;
  std::size_t missing_predictions = 0;

  double coverage = 1.0;  // translation coverage of the evaluated corpus
  std::string coverage_policy;
  std::string translation_policy = "none";

  std::string model_id;
  std::string split_id;
  std::string zone_map_id;
  std::string translator_id;
};

struct EvalOptions {
  std::vector<std::size_t> ks = {1, 3, 5};
  CoveragePolicy policy = CoveragePolicy::count_missing_as_wrong;
  std::size_t confusion_top_n = 10;
  unsigned threads = 1;  // parallel evaluation must equal sequential
};

// The full protocol in one pass: top-k accuracy total and per zone,
// per-language accuracy, macro P/R/F1 per zone, confusion matrix.
EvalReport evaluate(const PredictionSet& preds, const Corpus& gold,
                    const ZoneMap& zones, const EvalOptions& options = {});

// Standalone metric entry points (same definitions as evaluate()).
double topk_accuracy(
    const PredictionSet& preds, const Corpus& gold, std::size_t k,
    CoveragePolicy policy = CoveragePolicy::count_missing_as_wrong);
std::map<std::string, double> per_language_accuracy(const PredictionSet& preds,
                                                    const Corpus& gold);
std::map<std::string, PrfStats> zone_prf(const PredictionSet& preds,
                                         const Corpus& gold,
                                         const ZoneMap& zones);
ConfusionMatrix confusion_topn(const PredictionSet& preds, const Corpus& gold,
                               std::size_t n = 10);

// Micro-averaged precision, recall and accuracy over one slice, computed
// as three separate formulas (in a single-label setting they coincide).
struct MicroStats {
  double precision = 0.0;
  double recall = 0.0;
  double accuracy = 0.0;
};
MicroStats micro_stats(const PredictionSet& preds, const Corpus& gold_slice);

std::string report_to_json(const EvalReport& report);
void write_report(const EvalReport& report, const std::string& path);

// Companion CSV tables (<prefix>.zones.csv, .languages.csv, .topk.csv,
// .prf.csv, .confusion.csv) shaped for plotting.
void write_report_csvs(const EvalReport& report, const std::string& prefix);

}  // namespace triage
