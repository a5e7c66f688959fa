#include <doctest.h>

#include <fstream>

#include "test_support.hpp"
#include "triage/config.hpp"
#include "triage/errors.hpp"

using namespace triage;
using triage::testing::TempDir;

TEST_CASE("toml parser handles the supported grammar") {
  const TomlTable table = TomlTable::parse(R"(
# a comment
top = 1

[corpus]
num_samples = 5000
class_skew = 0.7        # inline comment
seed = 42

[train]
kind = "ftx"
learning_rate = 2e-1

[eval]
k = [1, 3, 5]

[flags]
stratified = true
name = "with # inside"
)",
                                           "test");
  CHECK(table.get_int("top", 0) == 1);
  CHECK(table.get_int("corpus.num_samples", 0) == 5000);
  CHECK(table.get_double("corpus.class_skew", 0.0) == doctest::Approx(0.7));
  CHECK(table.get_string("train.kind", "") == "ftx");
  CHECK(table.get_double("train.learning_rate", 0.0) == doctest::Approx(0.2));
  CHECK(table.get_int_list("eval.k", {}) ==
        std::vector<std::int64_t>{1, 3, 5});
  CHECK(table.get_bool("flags.stratified", false));
  CHECK(table.get_string("flags.name", "") == "with # inside");
  CHECK(table.get_int("corpus.missing", 9) == 9);
}

TEST_CASE("toml parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(TomlTable::parse("a==\n", "cfg"),
                       doctest::Contains("cfg:1"), ConfigError);
  CHECK_THROWS_AS(TomlTable::parse("[sec\nx = 1\n", "cfg"), ConfigError);
  CHECK_THROWS_AS(TomlTable::parse("x = 1\nx = 2\n", "cfg"), ConfigError);
  CHECK_THROWS_AS(TomlTable::parse("k = [1, 2\n", "cfg"), ConfigError);
  CHECK_THROWS_AS(TomlTable::parse("s = \"abc\n", "cfg"), ConfigError);
}

TEST_CASE("typed config applies defaults and validates") {
  const TomlTable table = TomlTable::parse(R"(
[corpus]
num_samples = 100
seed = 3

[train]
kind = "majority"
variant = "et-drop"

[eval]
policy = "ignore-missing"

[balance]
thresholds = [0, 30]
)",
                                           "test");
  const AppConfig config = config_from_table(table);
  CHECK(config.corpus.num_samples == 100);
  CHECK(config.corpus.num_classes == 1357);  // default preserved
  CHECK(config.train_kind == "majority");
  CHECK(config.train_variant == "et-drop");
  CHECK(config.eval_policy == CoveragePolicy::ignore_missing);
  CHECK(config.thresholds == std::vector<std::int64_t>{0, 30});
  CHECK(config.split.train_frac == doctest::Approx(0.52));
}

TEST_CASE("unknown keys and bad enums are rejected") {
  CHECK_THROWS_WITH_AS(
      config_from_table(TomlTable::parse("[corpus]\nnum_sample = 1\n", "c")),
      doctest::Contains("num_sample"), ConfigError);
  CHECK_THROWS_AS(
      config_from_table(TomlTable::parse("[train]\nkind = \"cnn\"\n", "c")),
      ConfigError);
  CHECK_THROWS_AS(
      config_from_table(TomlTable::parse("[eval]\npolicy = \"x\"\n", "c")),
      ConfigError);
  CHECK_THROWS_AS(
      config_from_table(TomlTable::parse("[eval]\nk = [0]\n", "c")),
      ConfigError);
}

TEST_CASE("config snapshot round-trips through the parser") {
  AppConfig config;
  config.corpus.num_samples = 1234;
  config.corpus.seed = 9;
  config.train_kind = "majority";
  config.eval_ks = {1, 7};
  config.thresholds = {5, 10};
  const std::string toml = config_to_toml(config);
  const AppConfig reloaded = config_from_table(TomlTable::parse(toml, "snap"));
  CHECK(reloaded.corpus.num_samples == 1234);
  CHECK(reloaded.corpus.seed == 9);
  CHECK(reloaded.train_kind == "majority");
  CHECK(reloaded.eval_ks == std::vector<std::size_t>{1, 7});
  CHECK(reloaded.thresholds == std::vector<std::int64_t>{5, 10});
  CHECK(config_to_toml(reloaded) == toml);
}

TEST_CASE("load_config reads from disk and reports missing files") {
  TempDir dir("cfg");
  const std::string path = dir.file("conf.toml");
  std::ofstream(path) << "[corpus]\nnum_samples = 7\n";
  CHECK(load_config(path).corpus.num_samples == 7);
  CHECK_THROWS_AS(load_config(dir.file("absent.toml")), ConfigError);
}
