#include "triage/balance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "triage/errors.hpp"
#include "triage/rng.hpp"

namespace triage {

std::size_t OversamplePlan::total_additions() const {
  std::size_t total = 0;
  for (const auto& [class_id, copies] : additions) {
    for (const auto& [id, count] : copies) total += count;
  }
  return total;
}

OversamplePlan plan_oversample(const Corpus& train, std::int64_t threshold,
                               std::uint64_t seed,
                               std::size_t cap_per_class) {
  if (threshold < 0)
    throw ConfigError("plan_oversample: threshold must be >= 0");

  OversamplePlan plan;
  plan.threshold = threshold;
  plan.cap_per_class = cap_per_class;
  plan.seed = seed;
  plan.train_fingerprint = corpus_fingerprint(train);

  // Claims of each class in corpus order; classes visited by ascending id
  // so the plan is a pure function of (train, threshold, seed).
  std::map<int, std::vector<const Claim*>> by_class;
  for (const Claim& claim : train.claims) {
    by_class[claim.class_id].push_back(&claim);
  }
  Rng rng(mix_seed(seed, 0xba1a0ce5ULL));
  for (const auto& [class_id, members] : by_class) {
    const std::int64_t support = static_cast<std::int64_t>(members.size());
    if (support >= threshold) continue;
    const std::size_t deficit = static_cast<std::size_t>(threshold - support);
    const std::size_t additions = std::min(deficit, cap_per_class);
    auto& copies = plan.additions[class_id];
    for (std::size_t i = 0; i < additions; ++i) {
      const Claim* pick = members[rng.next_index(members.size())];
      ++copies[pick->id];
    }
  }
  return plan;
}

Corpus apply(const OversamplePlan& plan, const Corpus& train) {
  if (plan.train_fingerprint != corpus_fingerprint(train)) {
    throw ConfigError(
        "oversample plan was built for a different corpus (fingerprint "
        "mismatch)");
  }
  Corpus out = train;
  std::map<std::string, const Claim*> by_id;
  for (const Claim& claim : train.claims) by_id[claim.id] = &claim;
  for (const auto& [class_id, copies] : plan.additions) {
    for (const auto& [source_id, count] : copies) {
      const Claim* source = by_id.at(source_id);
      for (std::size_t i = 0; i < count; ++i) {
        Claim dup = *source;
        dup.id = source_id + "#d" + std::to_string(i + 1);
        dup.source_id = source_id;
        out.claims.push_back(std::move(dup));
      }
    }
  }
  return out;
}

std::vector<SweepRow> sweep(const Corpus& train, const Corpus& dev,
                            const std::vector<std::int64_t>& thresholds,
                            const TrainFn& train_fn, const EvalFn& eval_fn,
                            std::uint64_t seed, std::size_t cap_per_class,
                            AugmentVariant variant,
                            const Translator* translator) {
  if (thresholds.empty()) throw ConfigError("sweep: no thresholds given");
  if (variant == AugmentVariant::translate && translator == nullptr) {
    throw ConfigError("sweep: translate variant needs a translator");
  }

  const std::vector<std::int64_t> supports = class_supports(train);
  std::vector<SweepRow> rows;
  for (const std::int64_t threshold : thresholds) {
    SweepRow row;
    row.threshold = threshold;
    row.train_support = supports;
    const OversamplePlan plan =
        plan_oversample(train, threshold, seed, cap_per_class);
    Corpus augmented = apply(plan, train);
    if (variant == AugmentVariant::translate) {
      // Swap each duplicate's text for its English translation when one is
      // available; otherwise the verbatim copy stays.
      for (Claim& claim : augmented.claims) {
        if (!claim.source_id) continue;
        const TranslationResult result = translator->translate(claim);
        if (result.ok()) {
          claim.text = result.text;
          claim.lang = "en";
        }
      }
    }
    row.additions = plan.total_additions();
    try {
      const Model model = train_fn(augmented);
      row.report = eval_fn(model, dev);
    } catch (const TrainError& e) {
      throw TrainError("sweep threshold " + std::to_string(threshold) + ": " +
                       e.what());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows,
                     const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write sweep csv: " + path);
  out << "threshold,total_acc,low_f1,mid_f1,top_f1\n";
  for (const SweepRow& row : rows) {
    const auto k1 = row.report.total_topk.find(1);
    out << row.threshold << ','
        << (k1 != row.report.total_topk.end() ? k1->second : 0.0) << ','
        << row.report.zone_prf.at("low").f1 << ','
        << row.report.zone_prf.at("mid").f1 << ','
        << row.report.zone_prf.at("top").f1 << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

void write_sweep_scatter_csv(const std::vector<SweepRow>& rows,
                             const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write sweep scatter csv: " + path);
  out << "class,support,log10_support,f1,threshold\n";
  for (const SweepRow& row : rows) {
    const auto& report = row.report;
    for (std::size_t c = 0; c < report.class_tp.size(); ++c) {
      const std::int64_t support =
          c < row.train_support.size() ? row.train_support[c] : 0;
      if (support <= 0) continue;
      const std::int64_t tp = report.class_tp[c];
      const std::int64_t fp = report.class_fp[c];
      const std::int64_t fn = report.class_fn[c];
      if (tp + fp + fn == 0) continue;
      const double p = tp + fp > 0 ? static_cast<double>(tp) /
                                         static_cast<double>(tp + fp)
                                   : 0.0;
      const double r = tp + fn > 0 ? static_cast<double>(tp) /
                                         static_cast<double>(tp + fn)
                                   : 0.0;
      const double f1 = p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
      out << c << ',' << support << ',' << std::log10(static_cast<double>(support))
          << ',' << f1 << ',' << row.threshold << '\n';
    }
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace triage
