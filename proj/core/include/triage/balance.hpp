#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "triage/claim.hpp"
#include "triage/clf.hpp"
#include "triage/eval.hpp"
#include "triage/xlate.hpp"

namespace triage {

// Random oversampling with replacement for under-supported classes. Every
// class with train support below the threshold receives
// min(threshold - support, cap_per_class) duplicated instances.
struct OversamplePlan {
  std::int64_t threshold = 0;
  std::size_t cap_per_class = 20;
  std::uint64_t seed = 0;
  std::string train_fingerprint;
  // class id -> (claim id -> copies). Only ids of that class appear.
  std::map<int, std::map<std::string, std::size_t>> additions;

  std::size_t total_additions() const;
};

OversamplePlan plan_oversample(const Corpus& train, std::int64_t threshold,
                               std::uint64_t seed,
                               std::size_t cap_per_class = 20);

// Appends the planned duplicates (fresh ids, source_id set) to the corpus.
// Throws ConfigError when the plan was built for a different corpus.
Corpus apply(const OversamplePlan& plan, const Corpus& train);

// One sweep row: a model trained on the oversampled corpus, evaluated on
// the untouched dev split.
struct SweepRow {
  std::int64_t threshold = 0;
  std::size_t additions = 0;
  EvalReport report;
  std::vector<std::int64_t> train_support;  // original, per class id
};

using TrainFn = std::function<Model(const Corpus&)>;
using EvalFn = std::function<EvalReport(const Model&, const Corpus&)>;

enum class AugmentVariant { duplicate, translate };

// Trains and evaluates once per threshold. With AugmentVariant::translate
// the planned additions are English translations of the selected claims
// instead of verbatim copies (claims whose translation fails are
// duplicated as-is); requires a translator.
std::vector<SweepRow> sweep(const Corpus& train, const Corpus& dev,
                            const std::vector<std::int64_t>& thresholds,
                            const TrainFn& train_fn, const EvalFn& eval_fn,
                            std::uint64_t seed,
                            std::size_t cap_per_class = 20,
                            AugmentVariant variant = AugmentVariant::duplicate,
                            const Translator* translator = nullptr);

// threshold,total_acc,low_f1,mid_f1,top_f1
void write_sweep_csv(const std::vector<SweepRow>& rows,
                     const std::string& path);
// class,support,log10_support,f1,threshold — per-class F1 against train
// support, one block per threshold.
void write_sweep_scatter_csv(const std::vector<SweepRow>& rows,
                             const std::string& path);

}  // namespace triage
