#include <doctest.h>

#include <fstream>

#include "test_support.hpp"
#include "triage/corpus_io.hpp"
#include "triage/errors.hpp"
#include "triage/generator.hpp"

using namespace triage;
using triage::testing::TempDir;

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("jsonl ingest maps fields onto the claim") {
  TempDir dir("io");
  const std::string path = dir.file("claims.jsonl");
  write_file(path,
             R"({"id":"a1","text":"Noise from rear axle","lang":"en","group":8,"class":1227})"
             "\n");
  const Corpus corpus = ingest(path, CorpusFormat::jsonl);
  REQUIRE(corpus.size() == 1);
  const Claim& claim = corpus.claims[0];
  CHECK(claim.id == "a1");
  CHECK(claim.text == "Noise from rear axle");
  CHECK(claim.lang == "en");
  CHECK(claim.group == 8);
  CHECK(claim.class_id == 1227);
  CHECK(corpus.num_classes() == 1228);
}

TEST_CASE("absent or blank lang maps to unk") {
  TempDir dir("io");
  const std::string path = dir.file("claims.jsonl");
  write_file(path,
             R"({"id":"a1","text":"x","group":0,"class":0})"
             "\n"
             R"({"id":"a2","text":"y","lang":"","group":0,"class":0})"
             "\n");
  const Corpus corpus = ingest(path, CorpusFormat::jsonl);
  CHECK(corpus.claims[0].lang == kUnkLang);
  CHECK(corpus.claims[1].lang == kUnkLang);
}

TEST_CASE("duplicate ids are rejected naming the id") {
  TempDir dir("io");
  const std::string path = dir.file("claims.jsonl");
  write_file(path,
             R"({"id":"a1","text":"x","class":0})"
             "\n"
             R"({"id":"a1","text":"y","class":1})"
             "\n");
  CHECK_THROWS_WITH_AS(ingest(path, CorpusFormat::jsonl),
                       doctest::Contains("a1"), IoError);
}

TEST_CASE("malformed records fail with the line number") {
  TempDir dir("io");
  const std::string path = dir.file("claims.jsonl");
  write_file(path,
             R"({"id":"a1","text":"x","class":0})"
             "\n"
             "{not json}\n");
  CHECK_THROWS_WITH_AS(ingest(path, CorpusFormat::jsonl),
                       doctest::Contains(":2:"), IoError);
}

TEST_CASE("csv ingest honors header, quoting and blank lang") {
  TempDir dir("io");
  const std::string path = dir.file("claims.csv");
  write_file(path,
             "id,text,lang,group,class\n"
             "a1,\"Noise, from rear axle\",en,8,1227\n"
             "a2,plain text,,0,3\n");
  const Corpus corpus = ingest(path, CorpusFormat::csv);
  REQUIRE(corpus.size() == 2);
  CHECK(corpus.claims[0].text == "Noise, from rear axle");
  CHECK(corpus.claims[1].lang == kUnkLang);

  write_file(path, "id,text,klass\na,b,c\n");
  CHECK_THROWS_AS(ingest(path, CorpusFormat::csv), IoError);
}

TEST_CASE("write then ingest round-trips a generated corpus") {
  CorpusConfig config;
  config.num_classes = 25;
  config.num_languages = 6;
  config.num_samples = 400;
  config.seed = 21;
  const Corpus corpus = generate_corpus(config);

  TempDir dir("io");
  const std::string path = dir.file("corpus.jsonl");
  write_jsonl(corpus, path);
  write_meta(corpus, corpus_meta_path(path));
  const Corpus loaded = read_corpus(path);

  REQUIRE(loaded.size() == corpus.size());
  CHECK(loaded.num_classes() == corpus.num_classes());
  CHECK(loaded.languages == corpus.languages);
  CHECK(corpus_fingerprint(loaded) == corpus_fingerprint(corpus));

  // Writing again is byte-identical.
  const std::string again = dir.file("again.jsonl");
  write_jsonl(loaded, again);
  CHECK(read_file(path) == read_file(again));
}
