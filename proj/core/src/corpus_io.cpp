#include "triage/corpus_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <unordered_set>

#include <json.hpp>

#include "triage/errors.hpp"
#include "triage/text.hpp"

namespace triage {
namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail_line(const std::string& path, std::size_t line,
                            const std::string& what) {
  throw IoError(path + ":" + std::to_string(line) + ": " + what);
}

void finalize(Corpus& corpus) {
  // Label space: tight bound over observed ids. Inventory: observed codes by
  // frequency, unk excluded.
  int max_class = -1;
  std::map<std::string, std::int64_t> lang_counts;
  for (const Claim& claim : corpus.claims) {
    max_class = std::max(max_class, claim.class_id);
    if (claim.lang != kUnkLang) ++lang_counts[claim.lang];
  }
  corpus.label_names.assign(static_cast<std::size_t>(max_class + 1), "");
  std::vector<std::pair<std::string, std::int64_t>> ranked(lang_counts.begin(),
                                                           lang_counts.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) {
                     if (a.second != b.second) return a.second > b.second;
                     return a.first < b.first;
                   });
  corpus.languages.clear();
  for (const auto& [code, n] : ranked) corpus.languages.push_back(code);
}

Claim claim_from_json(const json& record, const std::string& path,
                      std::size_t line) {
  Claim claim;
  if (!record.is_object()) fail_line(path, line, "record is not an object");
  if (!record.contains("id") || !record["id"].is_string())
    fail_line(path, line, "missing string field 'id'");
  if (!record.contains("text") || !record["text"].is_string())
    fail_line(path, line, "missing string field 'text'");
  if (!record.contains("class") || !record["class"].is_number_integer())
    fail_line(path, line, "missing integer field 'class'");
  claim.id = record["id"].get<std::string>();
  claim.text = record["text"].get<std::string>();
  claim.class_id = record["class"].get<int>();
  if (claim.class_id < 0) fail_line(path, line, "negative class id");
  if (trim(claim.text).empty()) fail_line(path, line, "blank text");
  if (record.contains("group")) {
    if (!record["group"].is_number_integer())
      fail_line(path, line, "field 'group' must be an integer");
    claim.group = record["group"].get<int>();
  }
  if (record.contains("lang") && record["lang"].is_string()) {
    const std::string lang = record["lang"].get<std::string>();
    claim.lang = lang.empty() ? kUnkLang : lang;
  } else {
    claim.lang = kUnkLang;
  }
  if (record.contains("source_id") && record["source_id"].is_string()) {
    claim.source_id = record["source_id"].get<std::string>();
  }
  return claim;
}

Corpus ingest_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file: " + path);
  Corpus corpus;
  std::unordered_set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::exception& e) {
      fail_line(path, line_no, std::string("invalid JSON: ") + e.what());
    }
    Claim claim = claim_from_json(record, path, line_no);
    if (!ids.insert(claim.id).second)
      fail_line(path, line_no, "duplicate claim id '" + claim.id + "'");
    corpus.claims.push_back(std::move(claim));
  }
  finalize(corpus);
  return corpus;
}

// Minimal RFC-4180 row reader: quoted fields, doubled quotes, no embedded
// newlines.
std::vector<std::string> split_csv_row(const std::string& line,
                                       const std::string& path,
                                       std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      if (!field.empty()) fail_line(path, line_no, "stray quote in field");
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\r') {
      // tolerate CRLF
    } else {
      field.push_back(c);
    }
  }
  if (quoted) fail_line(path, line_no, "unterminated quoted field");
  fields.push_back(std::move(field));
  return fields;
}

Corpus ingest_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw IoError(path + ": empty CSV file");
  const std::vector<std::string> header = split_csv_row(line, path, 1);
  const std::vector<std::string> expected = {"id", "text", "lang", "group",
                                             "class"};
  if (header != expected) {
    throw IoError(path + ": CSV header must be 'id,text,lang,group,class'");
  }
  Corpus corpus;
  std::unordered_set<std::string> ids;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split_csv_row(line, path, line_no);
    if (fields.size() != 5)
      fail_line(path, line_no, "expected 5 fields, got " +
                                   std::to_string(fields.size()));
    Claim claim;
    claim.id = fields[0];
    claim.text = fields[1];
    claim.lang = fields[2].empty() ? kUnkLang : fields[2];
    try {
      claim.group = std::stoi(fields[3]);
      claim.class_id = std::stoi(fields[4]);
    } catch (const std::exception&) {
      fail_line(path, line_no, "group/class must be integers");
    }
    if (claim.class_id < 0) fail_line(path, line_no, "negative class id");
    if (trim(claim.text).empty()) fail_line(path, line_no, "blank text");
    if (!ids.insert(claim.id).second)
      fail_line(path, line_no, "duplicate claim id '" + claim.id + "'");
    corpus.claims.push_back(std::move(claim));
  }
  finalize(corpus);
  return corpus;
}

}  // namespace

Corpus ingest(const std::string& path, CorpusFormat format) {
  return format == CorpusFormat::jsonl ? ingest_jsonl(path) : ingest_csv(path);
}

void write_jsonl(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write corpus file: " + path);
  for (const Claim& claim : corpus.claims) {
    ordered_json record;
    record["id"] = claim.id;
    record["text"] = claim.text;
    record["lang"] = claim.lang;
    record["group"] = claim.group;
    record["class"] = claim.class_id;
    if (claim.source_id) record["source_id"] = *claim.source_id;
    out << record.dump() << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

std::string corpus_meta_path(const std::string& corpus_path) {
  return corpus_path + ".meta.json";
}

void write_meta(const Corpus& corpus, const std::string& path) {
  ordered_json doc;
  doc["schema"] = "corpus-meta-v1";
  doc["num_classes"] = corpus.num_classes();
  doc["label_names"] = corpus.label_names;
  doc["languages"] = corpus.languages;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write corpus meta: " + path);
  out << doc.dump(2) << '\n';
}

Corpus read_corpus(const std::string& path) {
  Corpus corpus = ingest_jsonl(path);
  const std::string meta_path = corpus_meta_path(path);
  if (std::filesystem::exists(meta_path)) {
    std::ifstream in(meta_path, std::ios::binary);
    json doc;
    try {
      in >> doc;
    } catch (const json::exception& e) {
      throw IoError("malformed corpus meta " + meta_path + ": " + e.what());
    }
    if (doc.value("schema", "") != "corpus-meta-v1") {
      throw IoError("unsupported corpus meta schema in " + meta_path);
    }
    const auto names = doc.at("label_names").get<std::vector<std::string>>();
    if (names.size() < corpus.num_classes()) {
      throw IoError(meta_path + ": label space smaller than observed classes");
    }
    corpus.label_names = names;
    corpus.languages = doc.at("languages").get<std::vector<std::string>>();
  }
  return corpus;
}

}  // namespace triage
