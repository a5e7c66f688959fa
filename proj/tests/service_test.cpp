#include <doctest.h>

#include <httplib.h>

#include <json.hpp>
#include <thread>

#include "test_support.hpp"
#include "triage/service.hpp"

using namespace triage;
using nlohmann::json;
using triage::testing::make_corpus;

namespace {

struct RunningServer {
  httplib::Server server;
  std::thread thread;
  int port = 0;

  explicit RunningServer(const ServeContext& context) {
    register_routes(server, context);
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~RunningServer() {
    server.stop();
    thread.join();
  }
};

Model toy_model() {
  Corpus train = make_corpus({{"a", "pump leak", "en", 0},
                              {"b", "pump leak oil", "en", 0},
                              {"c", "brake noise", "en", 1},
                              {"d", "brake noise squeal", "en", 1},
                              {"e", "window stuck", "en", 2}},
                             3);
  TrainConfig config;
  config.hash_buckets = 1 << 10;
  config.embed_dim = 8;
  config.epochs = 6;
  config.learning_rate = 0.5;
  config.seed = 12;
  return train_ftx(train, config);
}

}  // namespace

TEST_CASE("predict endpoint serves ranked classes and health reports") {
  const Model model = toy_model();
  ServeContext context;
  context.model = &model;
  RunningServer running(context);
  httplib::Client client("127.0.0.1", running.port);

  SUBCASE("well-formed request returns k ranked classes") {
    const auto res = client.Post("/predict", R"({"text":"pump leak","k":3})",
                                 "application/json");
    REQUIRE(res);
    CHECK(res->status == 200);
    const json body = json::parse(res->body);
    REQUIRE(body["ranked"].size() == 3);
    CHECK(body["ranked"][0]["class"] == 0);
    double prev = 1.0;
    for (const auto& entry : body["ranked"]) {
      CHECK(entry["prob"].get<double>() <= prev);
      prev = entry["prob"].get<double>();
    }
    // No profiles loaded: language comes back unk.
    CHECK(body["detected_lang"] == "unk");
  }
  SUBCASE("empty body is a 400") {
    const auto res = client.Post("/predict", "{}", "application/json");
    REQUIRE(res);
    CHECK(res->status == 400);
  }
  SUBCASE("non-json body is a 400") {
    const auto res = client.Post("/predict", "not json", "application/json");
    REQUIRE(res);
    CHECK(res->status == 400);
  }
  SUBCASE("bad k is a 400") {
    const auto res = client.Post("/predict", R"({"text":"x","k":0})",
                                 "application/json");
    REQUIRE(res);
    CHECK(res->status == 400);
  }
  SUBCASE("oversized text is a 413") {
    json body;
    body["text"] = std::string(17 * 1024, 'x');
    const auto res = client.Post("/predict", body.dump(), "application/json");
    REQUIRE(res);
    CHECK(res->status == 413);
  }
  SUBCASE("health returns the model fingerprint") {
    const auto res = client.Get("/health");
    REQUIRE(res);
    CHECK(res->status == 200);
    const json body = json::parse(res->body);
    CHECK(body["status"] == "ok");
    CHECK(body["model"] == model.fingerprint());
  }
}

TEST_CASE("concurrent requests match sequential answers") {
  const Model model = toy_model();
  ServeContext context;
  context.model = &model;
  RunningServer running(context);

  const std::vector<std::string> texts = {"pump leak", "brake noise",
                                          "window stuck", "pump noise"};
  std::vector<std::string> sequential(texts.size());
  {
    httplib::Client client("127.0.0.1", running.port);
    for (std::size_t i = 0; i < texts.size(); ++i) {
      json body;
      body["text"] = texts[i];
      body["k"] = 3;
      sequential[i] =
          client.Post("/predict", body.dump(), "application/json")->body;
    }
  }

  std::vector<std::string> concurrent(texts.size() * 8);
  std::vector<std::thread> pool;
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&, t] {
      httplib::Client client("127.0.0.1", running.port);
      for (std::size_t i = 0; i < texts.size(); ++i) {
        json body;
        body["text"] = texts[i];
        body["k"] = 3;
        concurrent[static_cast<std::size_t>(t) * texts.size() + i] =
            client.Post("/predict", body.dump(), "application/json")->body;
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (std::size_t t = 0; t < 8; ++t) {
    for (std::size_t i = 0; i < texts.size(); ++i) {
      CHECK(concurrent[t * texts.size() + i] == sequential[i]);
    }
  }
}

TEST_CASE("language detection rides along when profiles are supplied") {
  const Model model = toy_model();
  Corpus lang_corpus;
  lang_corpus.label_names.assign(2, "");
  for (int i = 0; i < 40; ++i) {
    Claim en;
    en.id = "en" + std::to_string(i);
    en.text = "the brake pedal makes a grinding noise when pressed";
    en.lang = "en";
    lang_corpus.claims.push_back(en);
    Claim sv;
    sv.id = "sv" + std::to_string(i);
    sv.text = "bromspedalen ger ett slipande ljud vid nedtryckning";
    sv.lang = "sv";
    lang_corpus.claims.push_back(sv);
  }
  const auto profiles = train_profiles(lang_corpus);

  ServeContext context;
  context.model = &model;
  context.profiles = &profiles;
  RunningServer running(context);
  httplib::Client client("127.0.0.1", running.port);
  const auto res = client.Post(
      "/predict",
      R"({"text":"the brake pedal makes a loud noise when pressed"})",
      "application/json");
  REQUIRE(res);
  const json body = json::parse(res->body);
  CHECK(body["detected_lang"] == "en");
}
