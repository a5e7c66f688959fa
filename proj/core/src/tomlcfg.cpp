#include "triage/tomlcfg.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "triage/errors.hpp"
#include "triage/text.hpp"

namespace triage {
namespace {

[[noreturn]] void fail(const std::string& source, std::size_t line,
                       const std::string& what) {
  throw ConfigError(source + ":" + std::to_string(line) + ": " + what);
}

bool is_bare_key_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '-';
}

std::string parse_basic_string(std::string_view raw, const std::string& source,
                               std::size_t line) {
  // raw includes the surrounding quotes
  std::string out;
  for (std::size_t i = 1; i + 1 < raw.size(); ++i) {
    const char c = raw[i];
    if (c != '\\') {
      out.push_back(c);
      continue;
    }
    if (i + 2 >= raw.size()) fail(source, line, "dangling escape in string");
    const char e = raw[++i];
    switch (e) {
      case 'n': out.push_back('\n'); break;
      case 't': out.push_back('\t'); break;
      case 'r': out.push_back('\r'); break;
      case '"': out.push_back('"'); break;
      case '\\': out.push_back('\\'); break;
      default: fail(source, line, std::string("unsupported escape \\") + e);
    }
  }
  return out;
}

TomlTable::Scalar parse_scalar(std::string_view raw, const std::string& source,
                               std::size_t line) {
  if (raw.empty()) fail(source, line, "empty value");
  if (raw.front() == '"') {
    if (raw.size() < 2 || raw.back() != '"')
      fail(source, line, "unterminated string");
    return parse_basic_string(raw, source, line);
  }
  if (raw == "true") return true;
  if (raw == "false") return false;
  // Number: integer unless it contains . e E
  const std::string text(raw);
  const bool is_float = text.find_first_of(".eE") != std::string::npos;
  try {
    std::size_t used = 0;
    if (is_float) {
      const double value = std::stod(text, &used);
      if (used != text.size()) fail(source, line, "malformed number: " + text);
      return value;
    }
    const std::int64_t value = std::stoll(text, &used, 10);
    if (used != text.size()) fail(source, line, "malformed integer: " + text);
    return value;
  } catch (const std::exception&) {
    fail(source, line, "cannot parse value: " + text);
  }
}

// Splits an array body "1, 2, 3" honoring quoted strings.
std::vector<std::string_view> split_array_items(std::string_view body,
                                                const std::string& source,
                                                std::size_t line) {
  std::vector<std::string_view> items;
  std::size_t start = 0;
  bool in_string = false;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size() && body[i] == '"' &&
        (i == 0 || body[i - 1] != '\\')) {
      in_string = !in_string;
    }
    if (i == body.size() || (body[i] == ',' && !in_string)) {
      const std::string_view item = trim(body.substr(start, i - start));
      if (!item.empty()) items.push_back(item);
      start = i + 1;
    }
  }
  if (in_string) fail(source, line, "unterminated string in array");
  return items;
}

}  // namespace

TomlTable TomlTable::parse(std::string_view text, const std::string& source) {
  TomlTable table;
  table.source_ = source;
  std::string section;
  std::size_t line_no = 0;
  std::istringstream stream{std::string(text)};
  std::string raw_line;
  while (std::getline(stream, raw_line)) {
    ++line_no;
    // Strip comments outside strings.
    bool in_string = false;
    std::string stripped;
    for (const char c : raw_line) {
      if (c == '"') in_string = !in_string;
      if (c == '#' && !in_string) break;
      stripped.push_back(c);
    }
    const std::string_view line = trim(stripped);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail(source, line_no, "unterminated section");
      const std::string_view name = trim(line.substr(1, line.size() - 2));
      if (name.empty()) fail(source, line_no, "empty section name");
      for (const char c : name) {
        if (!is_bare_key_char(c) && c != '.')
          fail(source, line_no, "bad section name");
      }
      section = std::string(name);
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      fail(source, line_no, "expected key = value");
    const std::string_view key_part = trim(line.substr(0, eq));
    const std::string_view value_part = trim(line.substr(eq + 1));
    if (key_part.empty()) fail(source, line_no, "empty key");
    for (const char c : key_part) {
      if (!is_bare_key_char(c)) fail(source, line_no, "bad key name");
    }
    const std::string key =
        section.empty() ? std::string(key_part)
                        : section + "." + std::string(key_part);
    if (table.scalars_.count(key) || table.arrays_.count(key))
      fail(source, line_no, "duplicate key " + key);

    if (!value_part.empty() && value_part.front() == '[') {
      if (value_part.back() != ']')
        fail(source, line_no, "unterminated array (must be single-line)");
      const std::string_view body =
          value_part.substr(1, value_part.size() - 2);
      std::vector<Scalar> items;
      for (const std::string_view item :
           split_array_items(body, source, line_no)) {
        items.push_back(parse_scalar(item, source, line_no));
      }
      table.arrays_.emplace(key, std::move(items));
    } else {
      table.scalars_.emplace(key, parse_scalar(value_part, source, line_no));
    }
  }
  return table;
}

TomlTable TomlTable::parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path);
}

bool TomlTable::has(const std::string& key) const {
  return scalars_.count(key) != 0 || arrays_.count(key) != 0;
}

std::vector<std::string> TomlTable::keys() const {
  std::vector<std::string> out;
  for (const auto& [key, value] : scalars_) out.push_back(key);
  for (const auto& [key, value] : arrays_) out.push_back(key);
  return out;
}

void TomlTable::type_error(const std::string& key, const char* expected) const {
  throw ConfigError(source_ + ": key '" + key + "' is not a " + expected);
}

std::string TomlTable::get_string(const std::string& key,
                                  const std::string& fallback) const {
  const auto it = scalars_.find(key);
  if (it == scalars_.end()) {
    if (arrays_.count(key)) type_error(key, "string");
    return fallback;
  }
  if (const auto* value = std::get_if<std::string>(&it->second)) return *value;
  type_error(key, "string");
}

std::int64_t TomlTable::get_int(const std::string& key,
                                std::int64_t fallback) const {
  const auto it = scalars_.find(key);
  if (it == scalars_.end()) {
    if (arrays_.count(key)) type_error(key, "integer");
    return fallback;
  }
  if (const auto* value = std::get_if<std::int64_t>(&it->second)) return *value;
  type_error(key, "integer");
}

double TomlTable::get_double(const std::string& key, double fallback) const {
  const auto it = scalars_.find(key);
  if (it == scalars_.end()) {
    if (arrays_.count(key)) type_error(key, "number");
    return fallback;
  }
  if (const auto* value = std::get_if<double>(&it->second)) return *value;
  if (const auto* value = std::get_if<std::int64_t>(&it->second))
    return static_cast<double>(*value);
  type_error(key, "number");
}

bool TomlTable::get_bool(const std::string& key, bool fallback) const {
  const auto it = scalars_.find(key);
  if (it == scalars_.end()) {
    if (arrays_.count(key)) type_error(key, "boolean");
    return fallback;
  }
  if (const auto* value = std::get_if<bool>(&it->second)) return *value;
  type_error(key, "boolean");
}

std::vector<std::int64_t> TomlTable::get_int_list(
    const std::string& key, const std::vector<std::int64_t>& fallback) const {
  const auto it = arrays_.find(key);
  if (it == arrays_.end()) {
    if (scalars_.count(key)) type_error(key, "array");
    return fallback;
  }
  std::vector<std::int64_t> out;
  for (const Scalar& item : it->second) {
    if (const auto* value = std::get_if<std::int64_t>(&item)) {
      out.push_back(*value);
    } else {
      type_error(key, "array of integers");
    }
  }
  return out;
}

}  // namespace triage
