#include "triage/config.hpp"

#include <set>
#include <sstream>

#include "triage/errors.hpp"

namespace triage {
namespace {

std::size_t get_count(const TomlTable& table, const std::string& key,
                      std::size_t fallback) {
  const std::int64_t value =
      table.get_int(key, static_cast<std::int64_t>(fallback));
  if (value < 0) throw ConfigError("config: " + key + " must be >= 0");
  return static_cast<std::size_t>(value);
}

const std::set<std::string> kKnownKeys = {
    "corpus.num_classes", "corpus.num_languages", "corpus.num_samples",
    "corpus.class_skew", "corpus.language_mass_top10",
    "corpus.noise_phrase_rate", "corpus.unk_lang_rate",
    "corpus.untranslatable_rate", "corpus.max_len_tokens",
    "corpus.min_len_tokens", "corpus.seed",
    "split.train_frac", "split.dev_frac", "split.test_frac", "split.seed",
    "split.stratified",
    "train.kind", "train.variant", "train.ngram_max", "train.char_ngram_min",
    "train.char_ngram_max", "train.hash_buckets", "train.embed_dim",
    "train.epochs", "train.learning_rate", "train.seed",
    "langid.ngram_min", "langid.ngram_max", "langid.profile_size",
    "langid.min_samples", "langid.unk_margin", "langid.min_chars",
    "eval.k", "eval.policy", "eval.confusion_top_n", "eval.threads",
    "balance.thresholds", "balance.cap_per_class", "balance.seed",
};

}  // namespace

AppConfig config_from_table(const TomlTable& table) {
  for (const std::string& key : table.keys()) {
    if (kKnownKeys.count(key) == 0) {
      throw ConfigError("config: unknown key '" + key + "'");
    }
  }

  AppConfig config;
  config.corpus.num_classes =
      get_count(table, "corpus.num_classes", config.corpus.num_classes);
  config.corpus.num_languages =
      get_count(table, "corpus.num_languages", config.corpus.num_languages);
  config.corpus.num_samples =
      get_count(table, "corpus.num_samples", config.corpus.num_samples);
  config.corpus.class_skew =
      table.get_double("corpus.class_skew", config.corpus.class_skew);
  config.corpus.language_mass_top10 = table.get_double(
      "corpus.language_mass_top10", config.corpus.language_mass_top10);
  config.corpus.noise_phrase_rate = table.get_double(
      "corpus.noise_phrase_rate", config.corpus.noise_phrase_rate);
  config.corpus.unk_lang_rate =
      table.get_double("corpus.unk_lang_rate", config.corpus.unk_lang_rate);
  config.corpus.untranslatable_rate = table.get_double(
      "corpus.untranslatable_rate", config.corpus.untranslatable_rate);
  config.corpus.max_len_tokens =
      get_count(table, "corpus.max_len_tokens", config.corpus.max_len_tokens);
  config.corpus.min_len_tokens =
      get_count(table, "corpus.min_len_tokens", config.corpus.min_len_tokens);
  config.corpus.seed = static_cast<std::uint64_t>(
      table.get_int("corpus.seed", static_cast<std::int64_t>(config.corpus.seed)));

  config.split.train_frac =
      table.get_double("split.train_frac", config.split.train_frac);
  config.split.dev_frac =
      table.get_double("split.dev_frac", config.split.dev_frac);
  config.split.test_frac =
      table.get_double("split.test_frac", config.split.test_frac);
  config.split.seed = static_cast<std::uint64_t>(
      table.get_int("split.seed", static_cast<std::int64_t>(config.split.seed)));
  config.split.stratified =
      table.get_bool("split.stratified", config.split.stratified);

  config.train_kind = table.get_string("train.kind", config.train_kind);
  if (config.train_kind != "ftx" && config.train_kind != "majority") {
    throw ConfigError("config: train.kind must be ftx or majority");
  }
  config.train_variant =
      table.get_string("train.variant", config.train_variant);
  if (config.train_variant != "raw" && config.train_variant != "et-drop" &&
      config.train_variant != "et-fallback") {
    throw ConfigError(
        "config: train.variant must be raw, et-drop or et-fallback");
  }
  config.train.ngram_max =
      get_count(table, "train.ngram_max", config.train.ngram_max);
  config.train.char_ngram = {
      get_count(table, "train.char_ngram_min", config.train.char_ngram.first),
      get_count(table, "train.char_ngram_max",
                config.train.char_ngram.second)};
  config.train.hash_buckets =
      get_count(table, "train.hash_buckets", config.train.hash_buckets);
  config.train.embed_dim =
      get_count(table, "train.embed_dim", config.train.embed_dim);
  config.train.epochs = get_count(table, "train.epochs", config.train.epochs);
  config.train.learning_rate =
      table.get_double("train.learning_rate", config.train.learning_rate);
  config.train.seed = static_cast<std::uint64_t>(
      table.get_int("train.seed", static_cast<std::int64_t>(config.train.seed)));

  config.langid.ngram_min =
      get_count(table, "langid.ngram_min", config.langid.ngram_min);
  config.langid.ngram_max =
      get_count(table, "langid.ngram_max", config.langid.ngram_max);
  config.langid.profile_size =
      get_count(table, "langid.profile_size", config.langid.profile_size);
  config.langid.min_samples =
      get_count(table, "langid.min_samples", config.langid.min_samples);
  config.langid.unk_margin =
      table.get_double("langid.unk_margin", config.langid.unk_margin);
  config.langid.min_chars =
      get_count(table, "langid.min_chars", config.langid.min_chars);

  const std::vector<std::int64_t> ks =
      table.get_int_list("eval.k", {1, 3, 5});
  config.eval_ks.clear();
  for (const std::int64_t k : ks) {
    if (k < 1) throw ConfigError("config: eval.k entries must be >= 1");
    config.eval_ks.push_back(static_cast<std::size_t>(k));
  }
  const std::string policy =
      table.get_string("eval.policy", "count-missing-as-wrong");
  if (policy == "count-missing-as-wrong") {
    config.eval_policy = CoveragePolicy::count_missing_as_wrong;
  } else if (policy == "ignore-missing") {
    config.eval_policy = CoveragePolicy::ignore_missing;
  } else {
    throw ConfigError(
        "config: eval.policy must be count-missing-as-wrong or "
        "ignore-missing");
  }
  config.confusion_top_n =
      get_count(table, "eval.confusion_top_n", config.confusion_top_n);
  config.eval_threads = static_cast<unsigned>(
      get_count(table, "eval.threads", config.eval_threads));

  config.thresholds =
      table.get_int_list("balance.thresholds", config.thresholds);
  for (const std::int64_t threshold : config.thresholds) {
    if (threshold < 0)
      throw ConfigError("config: balance.thresholds must be >= 0");
  }
  config.cap_per_class =
      get_count(table, "balance.cap_per_class", config.cap_per_class);
  config.balance_seed = static_cast<std::uint64_t>(table.get_int(
      "balance.seed", static_cast<std::int64_t>(config.balance_seed)));
  return config;
}

AppConfig load_config(const std::string& path) {
  return config_from_table(TomlTable::parse_file(path));
}

std::string config_to_toml(const AppConfig& config) {
  std::ostringstream out;
  out.precision(17);
  out << "[corpus]\n";
  out << "num_classes = " << config.corpus.num_classes << "\n";
  out << "num_languages = " << config.corpus.num_languages << "\n";
  out << "num_samples = " << config.corpus.num_samples << "\n";
  out << "class_skew = " << config.corpus.class_skew << "\n";
  out << "language_mass_top10 = " << config.corpus.language_mass_top10 << "\n";
  out << "noise_phrase_rate = " << config.corpus.noise_phrase_rate << "\n";
  out << "unk_lang_rate = " << config.corpus.unk_lang_rate << "\n";
  out << "untranslatable_rate = " << config.corpus.untranslatable_rate << "\n";
  out << "max_len_tokens = " << config.corpus.max_len_tokens << "\n";
  out << "min_len_tokens = " << config.corpus.min_len_tokens << "\n";
  out << "seed = " << config.corpus.seed << "\n";
  out << "\n[split]\n";
  out << "train_frac = " << config.split.train_frac << "\n";
  out << "dev_frac = " << config.split.dev_frac << "\n";
  out << "test_frac = " << config.split.test_frac << "\n";
  out << "stratified = " << (config.split.stratified ? "true" : "false")
      << "\n";
  out << "seed = " << config.split.seed << "\n";
  out << "\n[train]\n";
  out << "kind = \"" << config.train_kind << "\"\n";
  out << "variant = \"" << config.train_variant << "\"\n";
  out << "ngram_max = " << config.train.ngram_max << "\n";
  out << "char_ngram_min = " << config.train.char_ngram.first << "\n";
  out << "char_ngram_max = " << config.train.char_ngram.second << "\n";
  out << "hash_buckets = " << config.train.hash_buckets << "\n";
  out << "embed_dim = " << config.train.embed_dim << "\n";
  out << "epochs = " << config.train.epochs << "\n";
  out << "learning_rate = " << config.train.learning_rate << "\n";
  out << "seed = " << config.train.seed << "\n";
  out << "\n[langid]\n";
  out << "ngram_min = " << config.langid.ngram_min << "\n";
  out << "ngram_max = " << config.langid.ngram_max << "\n";
  out << "profile_size = " << config.langid.profile_size << "\n";
  out << "min_samples = " << config.langid.min_samples << "\n";
  out << "unk_margin = " << config.langid.unk_margin << "\n";
  out << "min_chars = " << config.langid.min_chars << "\n";
  out << "\n[eval]\n";
  out << "k = [";
  for (std::size_t i = 0; i < config.eval_ks.size(); ++i) {
    out << (i ? ", " : "") << config.eval_ks[i];
  }
  out << "]\n";
  out << "policy = \""
      << (config.eval_policy == CoveragePolicy::count_missing_as_wrong
              ? "count-missing-as-wrong"
              : "ignore-missing")
      << "\"\n";
  out << "confusion_top_n = " << config.confusion_top_n << "\n";
  out << "threads = " << config.eval_threads << "\n";
  out << "\n[balance]\n";
  out << "thresholds = [";
  for (std::size_t i = 0; i < config.thresholds.size(); ++i) {
    out << (i ? ", " : "") << config.thresholds[i];
  }
  out << "]\n";
  out << "cap_per_class = " << config.cap_per_class << "\n";
  out << "seed = " << config.balance_seed << "\n";
  return out.str();
}

}  // namespace triage
