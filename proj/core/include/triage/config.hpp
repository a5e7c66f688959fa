#pragma once

#include <string>
#include <vector>

#include "triage/clf.hpp"
#include "triage/eval.hpp"
#include "triage/generator.hpp"
#include "triage/langid.hpp"
#include "triage/split.hpp"
#include "triage/tomlcfg.hpp"

namespace triage {

// Typed view of a triage TOML config. Every section is optional and every
// key has the documented default; unknown keys are rejected.
struct AppConfig {
  CorpusConfig corpus;
  SplitSpec split;
  TrainConfig train;
  std::string train_kind = "ftx";     // ftx | majority
  std::string train_variant = "raw";  // raw | et-drop | et-fallback
  LangIdOptions langid;
  std::vector<std::size_t> eval_ks = {1, 3, 5};
  CoveragePolicy eval_policy = CoveragePolicy::count_missing_as_wrong;
  std::size_t confusion_top_n = 10;
  unsigned eval_threads = 1;
  std::vector<std::int64_t> thresholds = {0, 10, 20, 30, 40, 50};
  std::size_t cap_per_class = 20;
  std::uint64_t balance_seed = 0;
};

AppConfig config_from_table(const TomlTable& table);
AppConfig load_config(const std::string& path);

// The config snapshot embedded in manifests (normalized TOML).
std::string config_to_toml(const AppConfig& config);

}  // namespace triage
