#include "triage/eval.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <thread>

#include <json.hpp>

#include "triage/errors.hpp"
#include "triage/text.hpp"

namespace triage {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::size_t kZoneCount = 3;

std::size_t zone_index(Zone zone) { return static_cast<std::size_t>(zone); }

bool hit_within(const std::vector<RankedPrediction>& ranked, int gold,
                std::size_t k) {
  const std::size_t take = std::min(k, ranked.size());
  for (std::size_t i = 0; i < take; ++i) {
    if (ranked[i].class_id == gold) return true;
  }
  return false;
}

struct Counters {
  std::vector<std::int64_t> hits_by_k;                     // [k index]
  std::vector<std::array<std::int64_t, kZoneCount>> zone_hits;  // [k][zone]
  std::array<std::int64_t, kZoneCount> zone_total{};
  std::array<std::int64_t, kZoneCount> zone_evaluated{};
  std::map<std::string, std::pair<std::int64_t, std::int64_t>> lang;  // hit/count
  std::vector<std::int64_t> tp, fp, fn;
  std::map<std::pair<int, int>, std::int64_t> confusion;  // pred -1 = missing
  std::int64_t evaluated = 0;
  std::int64_t missing = 0;

  Counters(std::size_t num_ks, std::size_t num_classes)
      : hits_by_k(num_ks, 0),
        zone_hits(num_ks, {0, 0, 0}),
        tp(num_classes, 0),
        fp(num_classes, 0),
        fn(num_classes, 0) {}

  void merge(const Counters& other) {
    for (std::size_t i = 0; i < hits_by_k.size(); ++i) {
      hits_by_k[i] += other.hits_by_k[i];
      for (std::size_t z = 0; z < kZoneCount; ++z)
        zone_hits[i][z] += other.zone_hits[i][z];
    }
    for (std::size_t z = 0; z < kZoneCount; ++z) {
      zone_total[z] += other.zone_total[z];
      zone_evaluated[z] += other.zone_evaluated[z];
    }
    for (const auto& [code, pair] : other.lang) {
      lang[code].first += pair.first;
      lang[code].second += pair.second;
    }
    for (std::size_t c = 0; c < tp.size(); ++c) {
      tp[c] += other.tp[c];
      fp[c] += other.fp[c];
      fn[c] += other.fn[c];
    }
    for (const auto& [key, count] : other.confusion) confusion[key] += count;
    evaluated += other.evaluated;
    missing += other.missing;
  }
};

void accumulate(const PredictionSet& preds, const Corpus& gold,
                const ZoneMap& zones, const std::vector<std::size_t>& ks,
                std::size_t begin, std::size_t end, Counters& counters) {
  for (std::size_t i = begin; i < end; ++i) {
    const Claim& claim = gold.claims[i];
    const Zone zone = zones.zone(claim.class_id);
    const std::size_t z = zone_index(zone);
    ++counters.zone_total[z];
    auto& lang_entry = counters.lang[claim.lang];
    ++lang_entry.second;

    const auto* ranked = preds.find(claim.id);
    if (ranked == nullptr || ranked->empty()) {
      ++counters.missing;
      ++counters.fn[static_cast<std::size_t>(claim.class_id)];
      counters.confusion[{claim.class_id, -1}] += 1;
      continue;
    }
    ++counters.evaluated;
    ++counters.zone_evaluated[z];

    for (std::size_t ki = 0; ki < ks.size(); ++ki) {
      if (hit_within(*ranked, claim.class_id, ks[ki])) {
        ++counters.hits_by_k[ki];
        ++counters.zone_hits[ki][z];
      }
    }

    const int predicted = (*ranked)[0].class_id;
    counters.confusion[{claim.class_id, predicted}] += 1;
    if (predicted == claim.class_id) {
      ++counters.tp[static_cast<std::size_t>(predicted)];
      ++lang_entry.first;
    } else {
      ++counters.fp[static_cast<std::size_t>(predicted)];
      ++counters.fn[static_cast<std::size_t>(claim.class_id)];
    }
  }
}

PrfStats macro_prf(const Counters& counters, const ZoneMap& zones, Zone zone) {
  PrfStats stats;
  double sum_p = 0.0, sum_r = 0.0, sum_f1 = 0.0;
  std::size_t included = 0;
  for (std::size_t c = 0; c < counters.tp.size(); ++c) {
    if (zones.zone_of[c] != zone) continue;
    const std::int64_t tp = counters.tp[c];
    const std::int64_t fp = counters.fp[c];
    const std::int64_t fn = counters.fn[c];
    // Classes untouched by this split (no gold, no predictions) would only
    // inject zeros into the macro average; they are skipped.
    if (tp + fp + fn == 0) continue;
    ++included;
    const double p = tp + fp > 0 ? static_cast<double>(tp) /
                                       static_cast<double>(tp + fp)
                                 : 0.0;
    const double r = tp + fn > 0 ? static_cast<double>(tp) /
                                       static_cast<double>(tp + fn)
                                 : 0.0;
    sum_p += p;
    sum_r += r;
    sum_f1 += p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
  }
  stats.classes = included;
  if (included > 0) {
    stats.precision = sum_p / static_cast<double>(included);
    stats.recall = sum_r / static_cast<double>(included);
    stats.f1 = sum_f1 / static_cast<double>(included);
  }
  return stats;
}

ConfusionMatrix build_confusion(const Counters& counters, const Corpus& gold,
                                std::size_t n) {
  ConfusionMatrix cm;
  std::vector<std::int64_t> gold_counts = class_supports(gold);
  std::vector<int> ids(gold_counts.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    const auto ca = gold_counts[static_cast<std::size_t>(a)];
    const auto cb = gold_counts[static_cast<std::size_t>(b)];
    if (ca != cb) return ca > cb;
    return a < b;
  });
  std::size_t keep = std::min(n, ids.size());
  // Only classes that actually appear in the gold split form rows.
  while (keep > 0 && gold_counts[static_cast<std::size_t>(ids[keep - 1])] == 0)
    --keep;
  cm.classes.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(keep));

  std::map<int, std::size_t> column_of;
  for (std::size_t i = 0; i < cm.classes.size(); ++i)
    column_of[cm.classes[i]] = i;
  cm.matrix.assign(cm.classes.size(),
                   std::vector<std::int64_t>(cm.classes.size() + 1, 0));
  for (const auto& [key, count] : counters.confusion) {
    const auto [gold_class, predicted] = key;
    const auto row_it = column_of.find(gold_class);
    if (row_it == column_of.end()) continue;
    const auto col_it =
        predicted >= 0 ? column_of.find(predicted) : column_of.end();
    if (col_it != column_of.end()) {
      cm.matrix[row_it->second][col_it->second] += count;
    } else {
      cm.matrix[row_it->second].back() += count;  // off-matrix or missing
    }
  }
  return cm;
}

}  // namespace

const char* to_string(Zone zone) {
  switch (zone) {
    case Zone::low: return "low";
    case Zone::mid: return "mid";
    case Zone::top: return "top";
  }
  return "?";
}

const char* to_string(CoveragePolicy policy) {
  return policy == CoveragePolicy::count_missing_as_wrong
             ? "count-missing-as-wrong"
             : "ignore-missing";
}

std::string ZoneMap::fingerprint() const {
  std::uint64_t h = fnv1a64(source_fingerprint);
  for (const Zone z : zone_of) h = fnv1a64(to_string(z), h);
  return to_hex(h);
}

ZoneMap compute_zones(const Corpus& train) {
  if (train.empty()) throw ConfigError("compute_zones: corpus is empty");
  const std::vector<std::int64_t> supports = class_supports(train);
  const std::int64_t total =
      std::accumulate(supports.begin(), supports.end(), std::int64_t{0});

  std::vector<int> order(supports.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto sa = supports[static_cast<std::size_t>(a)];
    const auto sb = supports[static_cast<std::size_t>(b)];
    if (sa != sb) return sa < sb;
    return a < b;
  });

  ZoneMap zones;
  zones.zone_of.assign(supports.size(), Zone::mid);
  zones.source_fingerprint = corpus_fingerprint(train);

  // Quartile comparisons in exact integer arithmetic: cum <= total/4.
  std::int64_t low_cum = 0;
  std::size_t low_end = 0;  // exclusive index into `order`
  while (low_end < order.size()) {
    const std::int64_t s = supports[static_cast<std::size_t>(order[low_end])];
    if (4 * (low_cum + s) > total) break;
    low_cum += s;
    zones.zone_of[static_cast<std::size_t>(order[low_end])] = Zone::low;
    ++low_end;
  }
  std::int64_t boundary_low =
      low_end < order.size() ? supports[static_cast<std::size_t>(order[low_end])]
                             : 0;

  std::int64_t top_cum = 0;
  std::size_t top_begin = order.size();  // inclusive from the back
  while (top_begin > low_end) {
    const std::int64_t s =
        supports[static_cast<std::size_t>(order[top_begin - 1])];
    if (4 * (top_cum + s) > total) break;
    top_cum += s;
    zones.zone_of[static_cast<std::size_t>(order[top_begin - 1])] = Zone::top;
    --top_begin;
  }
  std::int64_t boundary_top =
      top_begin > low_end
          ? supports[static_cast<std::size_t>(order[top_begin - 1])]
          : 0;

  for (const Zone z : zones.zone_of) {
    if (z == Zone::low)
      ++zones.low_classes;
    else if (z == Zone::top)
      ++zones.top_classes;
    else
      ++zones.mid_classes;
  }
  const double dtotal = static_cast<double>(total);
  zones.low_mass = static_cast<double>(low_cum) / dtotal;
  zones.top_mass = static_cast<double>(top_cum) / dtotal;
  zones.mid_mass = static_cast<double>(total - low_cum - top_cum) / dtotal;
  zones.boundary_delta =
      static_cast<double>(std::max(boundary_low, boundary_top)) / dtotal;
  return zones;
}

EvalReport evaluate(const PredictionSet& preds, const Corpus& gold,
                    const ZoneMap& zones, const EvalOptions& options) {
  if (gold.num_classes() > zones.zone_of.size()) {
    throw ConfigError("evaluate: zone map covers " +
                      std::to_string(zones.zone_of.size()) +
                      " classes but corpus has " +
                      std::to_string(gold.num_classes()));
  }
  for (const std::size_t k : options.ks) {
    if (k < 1) throw ConfigError("evaluate: k must be >= 1");
  }

  const std::size_t n = gold.size();
  const unsigned threads = std::max(1u, options.threads);
  Counters counters(options.ks.size(), zones.zone_of.size());
  if (threads == 1 || n < 2 * threads) {
    accumulate(preds, gold, zones, options.ks, 0, n, counters);
  } else {
    std::vector<Counters> partial(
        threads, Counters(options.ks.size(), zones.zone_of.size()));
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = std::min<std::size_t>(t * chunk, n);
      const std::size_t end = std::min<std::size_t>(begin + chunk, n);
      pool.emplace_back([&, t, begin, end] {
        accumulate(preds, gold, zones, options.ks, begin, end, partial[t]);
      });
    }
    for (std::thread& th : pool) th.join();
    for (const Counters& p : partial) counters.merge(p);
  }

  EvalReport report;
  report.total_claims = n;
  report.evaluated_claims = static_cast<std::size_t>(counters.evaluated);
  report.missing_predictions = static_cast<std::size_t>(counters.missing);
  report.coverage_policy = to_string(options.policy);
  report.model_id = preds.model_id;
  report.zone_map_id = zones.fingerprint();
  report.split_id = corpus_fingerprint(gold);

  const bool ignore_missing = options.policy == CoveragePolicy::ignore_missing;
  const std::int64_t denom_total =
      ignore_missing ? counters.evaluated : static_cast<std::int64_t>(n);
  for (std::size_t ki = 0; ki < options.ks.size(); ++ki) {
    report.total_topk[options.ks[ki]] =
        denom_total > 0 ? static_cast<double>(counters.hits_by_k[ki]) /
                              static_cast<double>(denom_total)
                        : 0.0;
  }
  for (std::size_t z = 0; z < kZoneCount; ++z) {
    const Zone zone = static_cast<Zone>(z);
    const std::int64_t denom =
        ignore_missing ? counters.zone_evaluated[z] : counters.zone_total[z];
    report.zone_counts[to_string(zone)] =
        static_cast<std::size_t>(counters.zone_total[z]);
    auto& per_k = report.zone_topk[to_string(zone)];
    for (std::size_t ki = 0; ki < options.ks.size(); ++ki) {
      per_k[options.ks[ki]] =
          denom > 0 ? static_cast<double>(counters.zone_hits[ki][z]) /
                          static_cast<double>(denom)
                    : 0.0;
    }
  }
  for (const auto& [code, pair] : counters.lang) {
    report.per_language[code] =
        pair.second > 0
            ? static_cast<double>(pair.first) / static_cast<double>(pair.second)
            : 0.0;
    report.per_language_counts[code] = static_cast<std::size_t>(pair.second);
  }
  for (const Zone zone : {Zone::low, Zone::mid, Zone::top}) {
    report.zone_prf[to_string(zone)] = macro_prf(counters, zones, zone);
  }
  report.class_tp = counters.tp;
  report.class_fp = counters.fp;
  report.class_fn = counters.fn;
  report.confusion = build_confusion(counters, gold, options.confusion_top_n);
  return report;
}

double topk_accuracy(const PredictionSet& preds, const Corpus& gold,
                     std::size_t k, CoveragePolicy policy) {
  if (k < 1) throw ConfigError("topk_accuracy: k must be >= 1");
  std::int64_t hits = 0, evaluated = 0;
  for (const Claim& claim : gold.claims) {
    const auto* ranked = preds.find(claim.id);
    if (ranked == nullptr || ranked->empty()) continue;
    std::set<int> seen;
    for (const RankedPrediction& p : *ranked) {
      if (!seen.insert(p.class_id).second) {
        throw ConfigError("topk_accuracy: duplicate prediction of class " +
                          std::to_string(p.class_id) + " for claim '" +
                          claim.id + "'");
      }
    }
    ++evaluated;
    if (hit_within(*ranked, claim.class_id, k)) ++hits;
  }
  const std::int64_t denom = policy == CoveragePolicy::ignore_missing
                                 ? evaluated
                                 : static_cast<std::int64_t>(gold.size());
  return denom > 0 ? static_cast<double>(hits) / static_cast<double>(denom)
                   : 0.0;
}

std::map<std::string, double> per_language_accuracy(const PredictionSet& preds,
                                                    const Corpus& gold) {
  std::map<std::string, std::pair<std::int64_t, std::int64_t>> buckets;
  for (const Claim& claim : gold.claims) {
    auto& bucket = buckets[claim.lang];
    ++bucket.second;
    const auto* ranked = preds.find(claim.id);
    if (ranked != nullptr && !ranked->empty() &&
        (*ranked)[0].class_id == claim.class_id) {
      ++bucket.first;
    }
  }
  std::map<std::string, double> out;
  for (const auto& [code, pair] : buckets) {
    out[code] = pair.second > 0 ? static_cast<double>(pair.first) /
                                      static_cast<double>(pair.second)
                                : 0.0;
  }
  return out;
}

std::map<std::string, PrfStats> zone_prf(const PredictionSet& preds,
                                         const Corpus& gold,
                                         const ZoneMap& zones) {
  EvalOptions options;
  options.ks = {1};
  options.confusion_top_n = 1;
  const EvalReport report = evaluate(preds, gold, zones, options);
  return report.zone_prf;
}

ConfusionMatrix confusion_topn(const PredictionSet& preds, const Corpus& gold,
                               std::size_t n) {
  if (n < 1) throw ConfigError("confusion_topn: n must be >= 1");
  Counters counters(0, gold.num_classes());
  ZoneMap all_mid;
  all_mid.zone_of.assign(gold.num_classes(), Zone::mid);
  const std::vector<std::size_t> no_ks;
  accumulate(preds, gold, all_mid, no_ks, 0, gold.size(), counters);
  return build_confusion(counters, gold, n);
}

MicroStats micro_stats(const PredictionSet& preds, const Corpus& gold_slice) {
  // Three independent computations on purpose: micro precision from
  // TP/(TP+FP), micro recall from TP/(TP+FN), accuracy from direct counts.
  std::map<int, std::int64_t> tp, fp, fn;
  std::int64_t correct = 0;
  for (const Claim& claim : gold_slice.claims) {
    const auto* ranked = preds.find(claim.id);
    const int predicted =
        ranked != nullptr && !ranked->empty() ? (*ranked)[0].class_id : -1;
    if (predicted == claim.class_id) {
      ++tp[claim.class_id];
      ++correct;
    } else {
      if (predicted >= 0) ++fp[predicted];
      ++fn[claim.class_id];
    }
  }
  std::int64_t tp_sum = 0, fp_sum = 0, fn_sum = 0;
  for (const auto& [c, v] : tp) tp_sum += v;
  for (const auto& [c, v] : fp) fp_sum += v;
  for (const auto& [c, v] : fn) fn_sum += v;
  MicroStats stats;
  stats.precision = tp_sum + fp_sum > 0 ? static_cast<double>(tp_sum) /
                                              static_cast<double>(tp_sum + fp_sum)
                                        : 0.0;
  stats.recall = tp_sum + fn_sum > 0 ? static_cast<double>(tp_sum) /
                                           static_cast<double>(tp_sum + fn_sum)
                                     : 0.0;
  stats.accuracy = gold_slice.empty()
                       ? 0.0
                       : static_cast<double>(correct) /
                             static_cast<double>(gold_slice.size());
  return stats;
}

std::string report_to_json(const EvalReport& report) {
  ordered_json doc;
  doc["schema"] = "eval-report-v1";
  auto number_map = [](const auto& src) {
    ordered_json obj = ordered_json::object();
    for (const auto& [key, value] : src) obj[std::to_string(key)] = value;
    return obj;
  };
  doc["total_topk"] = number_map(report.total_topk);
  doc["zone_topk"] = ordered_json::object();
  for (const auto& [zone, per_k] : report.zone_topk) {
    doc["zone_topk"][zone] = number_map(per_k);
  }
  doc["per_language"] = ordered_json::object();
  for (const auto& [lang, acc] : report.per_language) {
    doc["per_language"][lang] = {
        {"accuracy", acc},
        {"count", report.per_language_counts.at(lang)}};
  }
  doc["zone_prf"] = ordered_json::object();
  for (const auto& [zone, stats] : report.zone_prf) {
    doc["zone_prf"][zone] = {{"precision", stats.precision},
                             {"recall", stats.recall},
                             {"f1", stats.f1},
                             {"classes", stats.classes}};
  }
  doc["confusion"] = {{"classes", report.confusion.classes},
                      {"matrix", report.confusion.matrix}};
  doc["class_counts"] = {{"tp", report.class_tp},
                         {"fp", report.class_fp},
                         {"fn", report.class_fn}};
  doc["zone_counts"] = ordered_json::object();
  for (const auto& [zone, count] : report.zone_counts) {
    doc["zone_counts"][zone] = count;
  }
  doc["counts"] = {{"total", report.total_claims},
                   {"evaluated", report.evaluated_claims},
                   {"missing", report.missing_predictions}};
  doc["coverage"] = {{"fraction", report.coverage},
                     {"policy", report.coverage_policy},
                     {"translation_policy", report.translation_policy}};
  doc["provenance"] = {{"model", report.model_id},
                       {"split", report.split_id},
                       {"zone_map", report.zone_map_id},
                       {"translator", report.translator_id}};
  return doc.dump(2) + "\n";
}

void write_report(const EvalReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write report: " + path);
  out << report_to_json(report);
  if (!out) throw IoError("write failed: " + path);
}

void write_report_csvs(const EvalReport& report, const std::string& prefix) {
  auto open = [](const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write csv: " + path);
    return out;
  };
  {
    auto out = open(prefix + ".zones.csv");
    out << "k,total,low,mid,top\n";
    for (const auto& [k, total] : report.total_topk) {
      out << k << ',' << total;
      for (const char* zone : {"low", "mid", "top"}) {
        out << ',' << report.zone_topk.at(zone).at(k);
      }
      out << '\n';
    }
  }
  {
    auto out = open(prefix + ".languages.csv");
    out << "lang,count,accuracy\n";
    for (const auto& [lang, acc] : report.per_language) {
      out << lang << ',' << report.per_language_counts.at(lang) << ',' << acc
          << '\n';
    }
  }
  {
    auto out = open(prefix + ".topk.csv");
    out << "k,accuracy\n";
    for (const auto& [k, acc] : report.total_topk) {
      out << k << ',' << acc << '\n';
    }
  }
  {
    auto out = open(prefix + ".prf.csv");
    out << "zone,precision,recall,f1,classes\n";
    for (const auto& [zone, stats] : report.zone_prf) {
      out << zone << ',' << stats.precision << ',' << stats.recall << ','
          << stats.f1 << ',' << stats.classes << '\n';
    }
  }
  {
    auto out = open(prefix + ".confusion.csv");
    out << "gold";
    for (const int c : report.confusion.classes) out << ',' << c;
    out << ",other\n";
    for (std::size_t r = 0; r < report.confusion.classes.size(); ++r) {
      out << report.confusion.classes[r];
      for (const std::int64_t v : report.confusion.matrix[r]) out << ',' << v;
      out << '\n';
    }
  }
}

}  // namespace triage
