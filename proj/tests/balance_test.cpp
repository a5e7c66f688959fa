#include <doctest.h>

#include <map>
#include <set>

#include "test_support.hpp"
#include "triage/errors.hpp"
#include "triage/balance.hpp"
#include "triage/generator.hpp"
#include "triage/rng.hpp"

using namespace triage;
using triage::testing::make_corpus;

namespace {

Corpus class_blocks(const std::vector<std::pair<int, int>>& blocks) {
  Corpus corpus;
  int max_class = 0;
  for (const auto& [class_id, n] : blocks) max_class = std::max(max_class, class_id);
  corpus.label_names.assign(static_cast<std::size_t>(max_class + 1), "");
  std::size_t next = 0;
  for (const auto& [class_id, n] : blocks) {
    for (int i = 0; i < n; ++i) {
      Claim claim;
      claim.id = "b" + std::to_string(next++);
      claim.text = "text of class " + std::to_string(class_id) + " variant " +
                   std::to_string(i);
      claim.class_id = class_id;
      corpus.claims.push_back(claim);
    }
  }
  return corpus;
}

}  // namespace

TEST_CASE("threshold zero is a no-op") {
  const Corpus train = class_blocks({{0, 5}, {1, 2}});
  const OversamplePlan plan = plan_oversample(train, 0, 7);
  CHECK(plan.total_additions() == 0);
  const Corpus applied = apply(plan, train);
  CHECK(applied.size() == train.size());
  CHECK(corpus_fingerprint(applied) == corpus_fingerprint(train));
}

TEST_CASE("additions follow min(deficit, cap)") {
  const Corpus train = class_blocks({{0, 5}, {1, 25}, {2, 40}});
  const OversamplePlan plan = plan_oversample(train, 30, 7);
  // class 0: deficit 25, capped at 20; class 1: deficit 5; class 2: none
  std::map<int, std::size_t> per_class;
  for (const auto& [class_id, copies] : plan.additions) {
    for (const auto& [id, count] : copies) per_class[class_id] += count;
  }
  CHECK(per_class[0] == 20);
  CHECK(per_class[1] == 5);
  CHECK(per_class.count(2) == 0);
  CHECK(plan.total_additions() == 25);
}

TEST_CASE("additions only reference claims of the planned class") {
  const Corpus train = class_blocks({{0, 3}, {1, 8}, {2, 50}});
  const OversamplePlan plan = plan_oversample(train, 20, 3);
  std::map<std::string, int> class_of;
  for (const Claim& claim : train.claims) class_of[claim.id] = claim.class_id;
  for (const auto& [class_id, copies] : plan.additions) {
    for (const auto& [id, count] : copies) {
      CHECK(class_of.at(id) == class_id);
      CHECK(count >= 1);
    }
  }
}

TEST_CASE("apply grows the corpus by the plan size with fresh traced ids") {
  const Corpus train = class_blocks({{0, 4}, {1, 12}});
  const OversamplePlan plan = plan_oversample(train, 10, 11);
  REQUIRE(plan.total_additions() == 6);  // class 0 deficit
  const Corpus applied = apply(plan, train);
  CHECK(applied.size() == train.size() + 6);

  std::set<std::string> ids;
  for (const Claim& claim : applied.claims) {
    CHECK(ids.insert(claim.id).second);
  }
  // Duplicates reference their source and repeat its text.
  std::map<std::string, const Claim*> originals;
  for (const Claim& claim : train.claims) originals[claim.id] = &claim;
  std::size_t dups = 0;
  for (const Claim& claim : applied.claims) {
    if (!claim.source_id) continue;
    ++dups;
    const Claim* source = originals.at(*claim.source_id);
    CHECK(claim.text == source->text);
    CHECK(claim.class_id == source->class_id);
  }
  CHECK(dups == 6);
}

TEST_CASE("post-apply support equals min(threshold, support + cap)") {
  // Oracle: recount supports after applying.
  const Corpus train = class_blocks({{0, 2}, {1, 15}, {2, 28}, {3, 60}});
  const OversamplePlan plan = plan_oversample(train, 30, 5);
  const Corpus applied = apply(plan, train);
  const auto before = class_supports(train);
  const auto after = class_supports(applied);
  for (std::size_t c = 0; c < before.size(); ++c) {
    const std::int64_t expected =
        before[c] < 30 ? std::min<std::int64_t>(30, before[c] + 20) : before[c];
    CHECK(after[c] == expected);
  }
}

TEST_CASE("plans are deterministic and corpus-bound") {
  const Corpus train = class_blocks({{0, 3}, {1, 40}});
  const OversamplePlan a = plan_oversample(train, 25, 9);
  const OversamplePlan b = plan_oversample(train, 25, 9);
  CHECK(a.additions == b.additions);
  const OversamplePlan c = plan_oversample(train, 25, 10);
  CHECK(a.additions != c.additions);

  const Corpus other = class_blocks({{0, 3}, {1, 41}});
  CHECK_THROWS_AS(apply(a, other), ConfigError);
}

TEST_CASE("oversampling never adds new distinct texts to a class") {
  const Corpus train = class_blocks({{0, 4}, {1, 35}});
  const Corpus applied = apply(plan_oversample(train, 30, 13), train);
  auto texts_per_class = [](const Corpus& corpus) {
    std::map<int, std::set<std::string>> out;
    for (const Claim& claim : corpus.claims) {
      out[claim.class_id].insert(claim.text);
    }
    return out;
  };
  CHECK(texts_per_class(train) == texts_per_class(applied));
}

TEST_CASE("sweep with threshold zero reproduces the baseline run") {
  const Corpus train = class_blocks({{0, 30}, {1, 25}, {2, 4}});
  const Corpus dev = class_blocks({{0, 6}, {1, 6}, {2, 3}});
  const ZoneMap zones = compute_zones(train);

  TrainConfig config;
  config.hash_buckets = 1 << 10;
  config.embed_dim = 8;
  config.epochs = 4;
  config.learning_rate = 0.3;
  config.seed = 5;
  const TrainFn train_fn = [&](const Corpus& corpus) {
    return train_ftx(corpus, config);
  };
  const EvalFn eval_fn = [&](const Model& model, const Corpus& eval_corpus) {
    return evaluate(predict_corpus(model, eval_corpus, 5), eval_corpus, zones);
  };

  const auto rows = sweep(train, dev, {0}, train_fn, eval_fn, 3);
  REQUIRE(rows.size() == 1);
  const Model baseline = train_fn(train);
  const EvalReport expected = eval_fn(baseline, dev);
  CHECK(report_to_json(rows[0].report) == report_to_json(expected));
}

TEST_CASE("oversampling lifts starved low-zone classes") {
  // Eight starved classes (3 instances), three mid classes, one heavy class;
  // the low zone is exactly the starved set.
  std::vector<std::pair<int, int>> blocks;
  for (int c = 0; c < 8; ++c) blocks.push_back({c, 3});
  blocks.push_back({8, 30});
  blocks.push_back({9, 30});
  blocks.push_back({10, 80});
  Corpus train;
  train.label_names.assign(11, "");
  {
    std::size_t next = 0;
    Rng rng(17);
    for (const auto& [class_id, n] : blocks) {
      for (int i = 0; i < n; ++i) {
        Claim claim;
        claim.id = "s" + std::to_string(next++);
        // Three class-unique words plus one shared filler word.
        const std::string w = std::to_string(class_id);
        std::string text;
        for (int t = 0; t < 6; ++t) {
          const char* unique[] = {"alpha", "beta", "gamma"};
          text += (t ? " " : "");
          if (rng.next_double() < 0.75) {
            text += unique[rng.next_index(3)] + w;
          } else {
            text += "unit";
          }
        }
        claim.text = text;
        claim.class_id = class_id;
        train.claims.push_back(claim);
      }
    }
  }
  Corpus dev;
  dev.label_names.assign(11, "");
  {
    std::size_t next = 0;
    Rng rng(23);
    for (int class_id = 0; class_id < 11; ++class_id) {
      for (int i = 0; i < 8; ++i) {
        Claim claim;
        claim.id = "d" + std::to_string(next++);
        const std::string w = std::to_string(class_id);
        std::string text;
        for (int t = 0; t < 6; ++t) {
          const char* unique[] = {"alpha", "beta", "gamma"};
          text += (t ? " " : "");
          if (rng.next_double() < 0.75) {
            text += unique[rng.next_index(3)] + w;
          } else {
            text += "unit";
          }
        }
        claim.text = text;
        claim.class_id = class_id;
        dev.claims.push_back(claim);
      }
    }
  }

  const ZoneMap zones = compute_zones(train);
  for (int c = 0; c < 8; ++c) CHECK(zones.zone(c) == Zone::low);

  TrainConfig config;
  config.hash_buckets = 1 << 12;
  config.embed_dim = 16;
  config.epochs = 10;
  config.learning_rate = 0.4;
  config.seed = 1;
  const TrainFn train_fn = [&](const Corpus& corpus) {
    return train_ftx(corpus, config);
  };
  const EvalFn eval_fn = [&](const Model& model, const Corpus& eval_corpus) {
    return evaluate(predict_corpus(model, eval_corpus, 5), eval_corpus, zones);
  };

  const auto rows = sweep(train, dev, {0, 30}, train_fn, eval_fn, 29);
  REQUIRE(rows.size() == 2);
  const double low_f1_base = rows[0].report.zone_prf.at("low").f1;
  const double low_f1_oversampled = rows[1].report.zone_prf.at("low").f1;
  INFO("low zone f1 ", low_f1_base, " -> ", low_f1_oversampled);
  CHECK(low_f1_oversampled > low_f1_base);
  const double total_base = rows[0].report.total_topk.at(1);
  const double total_oversampled = rows[1].report.total_topk.at(1);
  CHECK(total_oversampled >= total_base - 0.005);
}

TEST_CASE("translate-augmentation sweep variant swaps in English copies") {
  CorpusConfig gen;
  gen.num_classes = 6;
  gen.num_languages = 4;
  gen.num_samples = 150;
  gen.untranslatable_rate = 0.0;
  gen.unk_lang_rate = 0.0;
  gen.seed = 31;
  const LexiconPack pack = build_lexicon(gen);
  const Corpus train = generate_corpus(gen, pack);
  const LexiconTranslator translator{LexiconPack(pack)};
  const ZoneMap zones = compute_zones(train);

  TrainConfig config;
  config.hash_buckets = 1 << 10;
  config.embed_dim = 8;
  config.epochs = 2;
  config.learning_rate = 0.2;
  config.seed = 3;
  const TrainFn train_fn = [&](const Corpus& corpus) {
    return train_ftx(corpus, config);
  };
  const EvalFn eval_fn = [&](const Model& model, const Corpus& eval_corpus) {
    return evaluate(predict_corpus(model, eval_corpus, 3), eval_corpus, zones);
  };

  CHECK_THROWS_AS(sweep(train, train, {40}, train_fn, eval_fn, 1, 20,
                        AugmentVariant::translate, nullptr),
                  ConfigError);
  const auto rows = sweep(train, train, {40}, train_fn, eval_fn, 1, 20,
                          AugmentVariant::translate, &translator);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].additions > 0);
}
