#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace triage {

// Minimal TOML reader covering the config schema: [sections], key = value
// with string/integer/float/bool scalars and flat arrays, # comments.
// Values are addressed as "section.key". Parse errors carry line numbers.
class TomlTable {
 public:
  using Scalar = std::variant<bool, std::int64_t, double, std::string>;

  static TomlTable parse(std::string_view text, const std::string& source);
  static TomlTable parse_file(const std::string& path);

  bool has(const std::string& key) const;
  // Keys present in the file; used to reject unknown/misspelled keys.
  std::vector<std::string> keys() const;

  std::string get_string(const std::string& key,
                         const std::string& fallback) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  double get_double(const std::string& key, double fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<std::int64_t> get_int_list(
      const std::string& key, const std::vector<std::int64_t>& fallback) const;

 private:
  std::map<std::string, Scalar> scalars_;
  std::map<std::string, std::vector<Scalar>> arrays_;
  std::string source_;

  [[noreturn]] void type_error(const std::string& key,
                               const char* expected) const;
};

}  // namespace triage
