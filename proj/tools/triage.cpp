// triage: generate, split, train, evaluate, sweep, predict and serve
// multilingual fault-report classifiers from the command line.

#include <CLI11.hpp>
#include <httplib.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "triage/balance.hpp"
#include "triage/claim.hpp"
#include "triage/clf.hpp"
#include "triage/config.hpp"
#include "triage/corpus_io.hpp"
#include "triage/errors.hpp"
#include "triage/eval.hpp"
#include "triage/generator.hpp"
#include "triage/langid.hpp"
#include "triage/manifest.hpp"
#include "triage/predictions.hpp"
#include "triage/service.hpp"
#include "triage/split.hpp"
#include "triage/stats.hpp"
#include "triage/version.hpp"
#include "triage/xlate.hpp"

namespace {

using namespace triage;

std::vector<std::string> g_argv;

RunManifest base_manifest(const std::string& command, const AppConfig& config,
                          std::uint64_t seed) {
  RunManifest manifest;
  manifest.command = command;
  manifest.argv = g_argv;
  manifest.config_snapshot = config_to_toml(config);
  manifest.seed = seed;
  manifest.tool_version = kToolVersion;
  manifest.created_utc = utc_now();
  return manifest;
}

void add_output(RunManifest& manifest, const std::string& path) {
  manifest.outputs[path] = file_fingerprint(path);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

void write_corpus_files(const Corpus& corpus, const std::string& path) {
  write_jsonl(corpus, path);
  write_meta(corpus, corpus_meta_path(path));
}

AppConfig load_optional_config(const std::string& path) {
  return path.empty() ? AppConfig{} : load_config(path);
}

MissPolicy variant_policy(const std::string& variant) {
  return variant == "et-fallback" ? MissPolicy::fallback : MissPolicy::drop;
}

// Shared by train/eval: run the variant's translation step, keeping claim
// ids stable so dropped claims surface as missing predictions.
TranslatedCorpus apply_variant(const Corpus& corpus,
                               const std::string& variant,
                               const Translator* translator) {
  if (variant == "raw") {
    TranslatedCorpus identity;
    identity.corpus = corpus;
    identity.coverage = 1.0;
    identity.policy = MissPolicy::fallback;
    identity.translator_id = "none";
    return identity;
  }
  if (variant != "et-drop" && variant != "et-fallback") {
    throw ConfigError("variant must be raw, et-drop or et-fallback");
  }
  if (translator == nullptr) {
    throw ConfigError("variant '" + variant +
                      "' needs --lexicon with the generator's lexicon pack");
  }
  return translate_corpus(corpus, *translator, variant_policy(variant));
}

struct GenArgs {
  std::string config_path;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
};

int run_gen(const GenArgs& args) {
  AppConfig config = load_config(args.config_path);
  if (args.seed) config.corpus.seed = *args.seed;
  if (args.samples) config.corpus.num_samples = *args.samples;

  const LexiconPack pack = build_lexicon(config.corpus);
  const Corpus corpus = generate_corpus(config.corpus, pack);

  write_corpus_files(corpus, args.out);
  const std::string lexicon_path = args.out + ".lexicon.json";
  pack.save(lexicon_path);
  const std::string stats_path = args.out + ".stats.json";
  write_text_file(stats_path, stats_to_json(corpus_stats(corpus)));

  RunManifest manifest = base_manifest("gen", config, config.corpus.seed);
  manifest.inputs[args.config_path] = file_fingerprint(args.config_path);
  add_output(manifest, args.out);
  add_output(manifest, corpus_meta_path(args.out));
  add_output(manifest, lexicon_path);
  add_output(manifest, stats_path);
  write_manifest(manifest, manifest_path(args.out));

  std::cout << "generated " << corpus.size() << " claims, "
            << corpus.num_classes() << " classes, " << corpus.languages.size()
            << " languages -> " << args.out << "\n";
  return 0;
}

struct SplitArgs {
  std::string in;
  std::string config_path;
  std::string out_prefix;
  std::optional<std::uint64_t> seed;
  bool stratified = false;
};

int run_split(const SplitArgs& args) {
  AppConfig config = load_optional_config(args.config_path);
  if (args.seed) config.split.seed = *args.seed;
  if (args.stratified) config.split.stratified = true;

  const Corpus corpus = read_corpus(args.in);
  const SplitResult result = split(corpus, config.split);

  const std::string train_path = args.out_prefix + ".train.jsonl";
  const std::string dev_path = args.out_prefix + ".dev.jsonl";
  const std::string test_path = args.out_prefix + ".test.jsonl";
  write_corpus_files(result.train, train_path);
  write_corpus_files(result.dev, dev_path);
  write_corpus_files(result.test, test_path);

  RunManifest manifest = base_manifest("split", config, config.split.seed);
  manifest.inputs[args.in] = file_fingerprint(args.in);
  for (const std::string& path : {train_path, dev_path, test_path}) {
    add_output(manifest, path);
    add_output(manifest, corpus_meta_path(path));
  }
  write_manifest(manifest, args.out_prefix + ".manifest.json");

  std::cout << "split " << corpus.size() << " -> train " << result.train.size()
            << ", dev " << result.dev.size() << ", test " << result.test.size()
            << "\n";
  return 0;
}

struct TrainArgs {
  std::string corpus_path;
  std::string config_path;
  std::string kind;
  std::string variant;
  std::string lexicon_path;
  std::string out;
  std::optional<std::uint64_t> seed;
};

int run_train(const TrainArgs& args) {
  AppConfig config = load_optional_config(args.config_path);
  if (!args.kind.empty()) config.train_kind = args.kind;
  if (!args.variant.empty()) config.train_variant = args.variant;
  if (args.seed) config.train.seed = *args.seed;
  if (config.train_kind != "ftx" && config.train_kind != "majority") {
    throw ConfigError("kind must be ftx or majority");
  }

  const Corpus corpus = read_corpus(args.corpus_path);
  const SplitResult parts = split(corpus, config.split);

  std::optional<LexiconTranslator> translator;
  if (!args.lexicon_path.empty()) {
    translator.emplace(LexiconPack::load(args.lexicon_path));
  }
  const Translator* translator_ptr = translator ? &*translator : nullptr;

  const TranslatedCorpus train_view =
      apply_variant(parts.train, config.train_variant, translator_ptr);
  const Model model = config.train_kind == "majority"
                          ? train_majority(train_view.corpus)
                          : train_ftx(train_view.corpus, config.train);
  save_model(model, args.out);

  // Dev report: zones frozen on the training split, predictions on the
  // variant's view of dev, gold labels from the full dev split.
  const ZoneMap zones = compute_zones(parts.train);
  const TranslatedCorpus dev_view =
      apply_variant(parts.dev, config.train_variant, translator_ptr);
  const std::size_t max_k =
      *std::max_element(config.eval_ks.begin(), config.eval_ks.end());
  const PredictionSet preds = predict_corpus(model, dev_view.corpus, max_k);
  EvalOptions options;
  options.ks = config.eval_ks;
  options.policy = config.eval_policy;
  options.confusion_top_n = config.confusion_top_n;
  options.threads = config.eval_threads;
  EvalReport report = evaluate(preds, parts.dev, zones, options);
  report.coverage = dev_view.coverage;
  report.translation_policy =
      config.train_variant == "raw" ? "none" : config.train_variant;
  report.translator_id = dev_view.translator_id;
  const std::string report_path = args.out + ".dev-report.json";
  write_report(report, report_path);

  RunManifest manifest = base_manifest("train", config, config.train.seed);
  manifest.inputs[args.corpus_path] = file_fingerprint(args.corpus_path);
  if (!args.config_path.empty()) {
    manifest.inputs[args.config_path] = file_fingerprint(args.config_path);
  }
  if (!args.lexicon_path.empty()) {
    manifest.inputs[args.lexicon_path] = file_fingerprint(args.lexicon_path);
  }
  add_output(manifest, args.out);
  add_output(manifest, report_path);
  write_manifest(manifest, manifest_path(args.out));

  std::cout << "trained " << config.train_kind << " (" << config.train_variant
            << ") on " << train_view.corpus.size()
            << " claims; dev top-1 accuracy "
            << report.total_topk.begin()->second << " -> " << args.out << "\n";
  return 0;
}

struct EvalArgs {
  std::string model_path;
  std::string predictions_path;
  std::string in;
  std::string zones_from;
  std::string config_path;
  std::string variant = "raw";
  std::string lexicon_path;
  std::string out;
  std::vector<std::size_t> ks;
  std::string policy;
  std::optional<std::size_t> confusion_top_n;
  unsigned threads = 0;
};

int run_eval(const EvalArgs& args) {
  if (args.model_path.empty() == args.predictions_path.empty()) {
    throw ConfigError("eval needs exactly one of --model or --predictions");
  }
  AppConfig config = load_optional_config(args.config_path);
  if (!args.ks.empty()) config.eval_ks = args.ks;
  if (!args.policy.empty()) {
    if (args.policy == "count-missing-as-wrong") {
      config.eval_policy = CoveragePolicy::count_missing_as_wrong;
    } else if (args.policy == "ignore-missing") {
      config.eval_policy = CoveragePolicy::ignore_missing;
    } else {
      throw ConfigError("unknown policy '" + args.policy + "'");
    }
  }
  if (args.confusion_top_n) config.confusion_top_n = *args.confusion_top_n;
  if (args.threads > 0) config.eval_threads = args.threads;

  const Corpus gold = read_corpus(args.in);
  const Corpus zone_source = read_corpus(args.zones_from);
  if (zone_source.num_classes() < gold.num_classes()) {
    throw ConfigError("zone source label space (" +
                      std::to_string(zone_source.num_classes()) +
                      ") smaller than eval corpus (" +
                      std::to_string(gold.num_classes()) + ")");
  }
  const ZoneMap zones = compute_zones(zone_source);

  const std::size_t max_k =
      *std::max_element(config.eval_ks.begin(), config.eval_ks.end());

  PredictionSet preds;
  double coverage = 1.0;
  std::string translation_policy = "none";
  std::string translator_id = "none";
  if (!args.model_path.empty()) {
    const Model model = load_model(args.model_path);
    if (model.num_classes < gold.num_classes()) {
      throw ConfigError(
          "model label space (" + std::to_string(model.num_classes) +
          ") smaller than eval corpus (" + std::to_string(gold.num_classes()) +
          ")");
    }
    std::optional<LexiconTranslator> translator;
    if (!args.lexicon_path.empty()) {
      translator.emplace(LexiconPack::load(args.lexicon_path));
    }
    const TranslatedCorpus view =
        apply_variant(gold, args.variant, translator ? &*translator : nullptr);
    preds = predict_corpus(model, view.corpus, max_k);
    coverage = view.coverage;
    translation_policy = args.variant == "raw" ? "none" : args.variant;
    translator_id = view.translator_id;
  } else {
    preds =
        import_predictions(args.predictions_path, zone_source.num_classes(),
                           &gold);
  }

  EvalOptions options;
  options.ks = config.eval_ks;
  options.policy = config.eval_policy;
  options.confusion_top_n = config.confusion_top_n;
  options.threads = config.eval_threads;
  EvalReport report = evaluate(preds, gold, zones, options);
  report.coverage = coverage;
  report.translation_policy = translation_policy;
  report.translator_id = translator_id;

  write_report(report, args.out);
  std::string csv_prefix = args.out;
  if (csv_prefix.ends_with(".json")) {
    csv_prefix.resize(csv_prefix.size() - 5);
  }
  write_report_csvs(report, csv_prefix);

  RunManifest manifest = base_manifest("eval", config, 0);
  manifest.inputs[args.in] = file_fingerprint(args.in);
  manifest.inputs[args.zones_from] = file_fingerprint(args.zones_from);
  if (!args.model_path.empty()) {
    manifest.inputs[args.model_path] = file_fingerprint(args.model_path);
  } else {
    manifest.inputs[args.predictions_path] =
        file_fingerprint(args.predictions_path);
  }
  add_output(manifest, args.out);
  for (const char* suffix : {".zones.csv", ".languages.csv", ".topk.csv",
                             ".prf.csv", ".confusion.csv"}) {
    add_output(manifest, csv_prefix + suffix);
  }
  write_manifest(manifest, manifest_path(args.out));

  std::cout << "evaluated " << gold.size() << " claims;";
  for (const auto& [k, accuracy] : report.total_topk) {
    std::cout << " top-" << k << " " << accuracy;
  }
  std::cout << " (zones: low " << zones.low_classes << ", mid "
            << zones.mid_classes << ", top " << zones.top_classes << ")\n";
  return 0;
}

struct PredictArgs {
  std::string model_path;
  std::string in;
  std::string out;
  std::size_t k = 5;
};

int run_predict(const PredictArgs& args) {
  const Model model = load_model(args.model_path);
  const Corpus corpus = read_corpus(args.in);
  const PredictionSet preds = predict_corpus(model, corpus, args.k);
  write_predictions(preds, args.out, &corpus);

  RunManifest manifest = base_manifest("predict", AppConfig{}, 0);
  manifest.inputs[args.model_path] = file_fingerprint(args.model_path);
  manifest.inputs[args.in] = file_fingerprint(args.in);
  add_output(manifest, args.out);
  write_manifest(manifest, manifest_path(args.out));

  std::cout << "wrote top-" << args.k << " predictions for " << corpus.size()
            << " claims -> " << args.out << "\n";
  return 0;
}

struct SweepArgs {
  std::string train_path;
  std::string dev_path;
  std::string config_path;
  std::string out_dir;
  std::string variant = "duplicate";
  std::string lexicon_path;
  std::vector<std::int64_t> thresholds;
  std::optional<std::uint64_t> seed;
};

int run_sweep(const SweepArgs& args) {
  AppConfig config = load_optional_config(args.config_path);
  if (!args.thresholds.empty()) config.thresholds = args.thresholds;
  if (args.seed) config.balance_seed = *args.seed;

  const Corpus train = read_corpus(args.train_path);
  const Corpus dev = read_corpus(args.dev_path);
  const ZoneMap zones = compute_zones(train);

  std::optional<LexiconTranslator> translator;
  if (!args.lexicon_path.empty()) {
    translator.emplace(LexiconPack::load(args.lexicon_path));
  }
  AugmentVariant variant = AugmentVariant::duplicate;
  if (args.variant == "translate") {
    variant = AugmentVariant::translate;
  } else if (args.variant != "duplicate") {
    throw ConfigError("sweep variant must be duplicate or translate");
  }

  const std::size_t max_k =
      *std::max_element(config.eval_ks.begin(), config.eval_ks.end());
  EvalOptions options;
  options.ks = config.eval_ks;
  options.policy = config.eval_policy;
  options.confusion_top_n = config.confusion_top_n;
  options.threads = config.eval_threads;

  const TrainFn train_fn = [&](const Corpus& corpus) {
    return config.train_kind == "majority" ? train_majority(corpus)
                                           : train_ftx(corpus, config.train);
  };
  const EvalFn eval_fn = [&](const Model& model, const Corpus& eval_corpus) {
    return evaluate(predict_corpus(model, eval_corpus, max_k), eval_corpus,
                    zones, options);
  };

  const auto rows = sweep(train, dev, config.thresholds, train_fn, eval_fn,
                          config.balance_seed, config.cap_per_class, variant,
                          translator ? &*translator : nullptr);

  std::filesystem::create_directories(args.out_dir);
  const std::string table_path = args.out_dir + "/sweep.csv";
  const std::string scatter_path = args.out_dir + "/scatter.csv";
  write_sweep_csv(rows, table_path);
  write_sweep_scatter_csv(rows, scatter_path);
  RunManifest manifest = base_manifest("sweep", config, config.balance_seed);
  manifest.inputs[args.train_path] = file_fingerprint(args.train_path);
  manifest.inputs[args.dev_path] = file_fingerprint(args.dev_path);
  add_output(manifest, table_path);
  add_output(manifest, scatter_path);
  for (const SweepRow& row : rows) {
    const std::string report_path =
        args.out_dir + "/report-" + std::to_string(row.threshold) + ".json";
    write_report(row.report, report_path);
    add_output(manifest, report_path);
  }
  write_manifest(manifest, args.out_dir + "/sweep.manifest.json");

  for (const SweepRow& row : rows) {
    std::cout << "threshold " << row.threshold << ": +" << row.additions
              << " claims, top-1 " << row.report.total_topk.begin()->second
              << ", low F1 " << row.report.zone_prf.at("low").f1 << "\n";
  }
  return 0;
}

struct ServeArgs {
  std::string model_path;
  std::string profiles_path;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::size_t k = 5;
};

int run_serve(const ServeArgs& args) {
  const Model model = load_model(args.model_path);
  std::vector<LanguageProfile> profiles;
  LangIdOptions langid_options;
  if (!args.profiles_path.empty()) {
    profiles = load_profiles(args.profiles_path, &langid_options);
  }

  ServeContext context;
  context.model = &model;
  context.profiles = profiles.empty() ? nullptr : &profiles;
  context.langid = langid_options;
  context.default_k = args.k;

  httplib::Server server;
  server.set_payload_max_length(1 << 20);
  register_routes(server, context);

  int port = args.port;
  if (port == 0) {
    port = server.bind_to_any_port(args.host);
    if (port < 0) throw IoError("cannot bind to " + args.host);
  } else if (!server.bind_to_port(args.host, port)) {
    throw IoError("cannot bind to " + args.host + ":" + std::to_string(port));
  }
  std::cout << "listening on " << args.host << ":" << port << " (model "
            << model.fingerprint() << ")" << std::endl;
  server.listen_after_bind();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) g_argv.emplace_back(argv[i]);

  CLI::App app{"multilingual fault-report classification toolkit"};
  app.set_version_flag("--version", triage::kToolVersion);
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a synthetic claims corpus");
  gen->add_option("--config", gen_args.config_path, "TOML config")->required();
  gen->add_option("--out", gen_args.out, "output corpus (JSONL)")->required();
  std::uint64_t gen_seed = 0;
  auto* gen_seed_opt = gen->add_option("--seed", gen_seed, "override corpus.seed");
  std::size_t gen_samples = 0;
  auto* gen_samples_opt =
      gen->add_option("--samples", gen_samples, "override corpus.num_samples");

  SplitArgs split_args;
  auto* split_cmd =
      app.add_subcommand("split", "partition a corpus into train/dev/test");
  split_cmd->add_option("--in", split_args.in, "input corpus")->required();
  split_cmd->add_option("--config", split_args.config_path, "TOML config");
  split_cmd
      ->add_option("--out-prefix", split_args.out_prefix,
                   "prefix for .train/.dev/.test files")
      ->required();
  std::uint64_t split_seed = 0;
  auto* split_seed_opt =
      split_cmd->add_option("--seed", split_seed, "override split.seed");
  split_cmd->add_flag("--stratified", split_args.stratified,
                      "force a train instance per class with >=3 claims");

  TrainArgs train_args;
  auto* train_cmd = app.add_subcommand(
      "train", "split a corpus, train a model, report on dev");
  train_cmd->add_option("--corpus", train_args.corpus_path, "full corpus")
      ->required();
  train_cmd->add_option("--config", train_args.config_path, "TOML config");
  train_cmd->add_option("--kind", train_args.kind, "ftx | majority");
  train_cmd->add_option("--variant", train_args.variant,
                        "raw | et-drop | et-fallback");
  train_cmd->add_option("--lexicon", train_args.lexicon_path,
                        "lexicon pack for et-* variants");
  train_cmd->add_option("--out", train_args.out, "model file")->required();
  std::uint64_t train_seed = 0;
  auto* train_seed_opt =
      train_cmd->add_option("--seed", train_seed, "override train.seed");

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand(
      "eval", "score a model or an imported prediction file");
  eval_cmd->add_option("--model", eval_args.model_path, "model file");
  eval_cmd->add_option("--predictions", eval_args.predictions_path,
                       "imported predictions (JSONL)");
  eval_cmd->add_option("--in", eval_args.in, "gold corpus")->required();
  eval_cmd
      ->add_option("--zones-from", eval_args.zones_from,
                   "corpus defining class-support zones (training split)")
      ->required();
  eval_cmd->add_option("--config", eval_args.config_path, "TOML config");
  eval_cmd->add_option("--k", eval_args.ks, "top-k list, e.g. --k 1 3 5");
  eval_cmd->add_option("--policy", eval_args.policy,
                       "count-missing-as-wrong | ignore-missing");
  std::size_t eval_top_n = 0;
  auto* eval_top_n_opt = eval_cmd->add_option("--confusion-top-n", eval_top_n,
                                              "confusion matrix size");
  eval_cmd->add_option("--threads", eval_args.threads, "evaluation threads");
  eval_cmd->add_option("--variant", eval_args.variant,
                       "raw | et-drop | et-fallback");
  eval_cmd->add_option("--lexicon", eval_args.lexicon_path,
                       "lexicon pack for et-* variants");
  eval_cmd->add_option("--out", eval_args.out, "report JSON")->required();

  PredictArgs predict_args;
  auto* predict_cmd =
      app.add_subcommand("predict", "write ranked predictions for a corpus");
  predict_cmd->add_option("--model", predict_args.model_path, "model file")
      ->required();
  predict_cmd->add_option("--in", predict_args.in, "input corpus")->required();
  predict_cmd->add_option("--k", predict_args.k, "entries per claim");
  predict_cmd->add_option("--out", predict_args.out, "predictions JSONL")
      ->required();

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand(
      "sweep",
      "oversampling threshold sweep: train and evaluate per threshold");
  sweep_cmd->add_option("--train", sweep_args.train_path, "training split")
      ->required();
  sweep_cmd->add_option("--dev", sweep_args.dev_path, "evaluation split")
      ->required();
  sweep_cmd->add_option("--config", sweep_args.config_path, "TOML config");
  sweep_cmd->add_option("--thresholds", sweep_args.thresholds,
                        "override balance.thresholds");
  sweep_cmd->add_option("--variant", sweep_args.variant,
                        "duplicate | translate");
  sweep_cmd->add_option("--lexicon", sweep_args.lexicon_path,
                        "lexicon pack for the translate variant");
  sweep_cmd->add_option("--out-dir", sweep_args.out_dir, "output directory")
      ->required();
  std::uint64_t sweep_seed = 0;
  auto* sweep_seed_opt =
      sweep_cmd->add_option("--seed", sweep_seed, "override balance.seed");

  ServeArgs serve_args;
  auto* serve_cmd =
      app.add_subcommand("serve", "HTTP prediction service for one model");
  serve_cmd->add_option("--model", serve_args.model_path, "model file")
      ->required();
  serve_cmd->add_option("--profiles", serve_args.profiles_path,
                        "langid profiles for detected_lang");
  serve_cmd->add_option("--host", serve_args.host, "bind address");
  serve_cmd->add_option("--port", serve_args.port, "port (0 picks a free one)");
  serve_cmd->add_option("--k", serve_args.k, "default top-k");

  try {
    app.parse(argc, argv);

    if (gen->parsed()) {
      if (*gen_seed_opt) gen_args.seed = gen_seed;
      if (*gen_samples_opt) gen_args.samples = gen_samples;
      return run_gen(gen_args);
    }
    if (split_cmd->parsed()) {
      if (*split_seed_opt) split_args.seed = split_seed;
      return run_split(split_args);
    }
    if (train_cmd->parsed()) {
      if (*train_seed_opt) train_args.seed = train_seed;
      return run_train(train_args);
    }
    if (eval_cmd->parsed()) {
      if (*eval_top_n_opt) eval_args.confusion_top_n = eval_top_n;
      return run_eval(eval_args);
    }
    if (predict_cmd->parsed()) return run_predict(predict_args);
    if (sweep_cmd->parsed()) {
      if (*sweep_seed_opt) sweep_args.seed = sweep_seed;
      return run_sweep(sweep_args);
    }
    if (serve_cmd->parsed()) return run_serve(serve_args);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const triage::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
