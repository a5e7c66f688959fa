#include "triage/service.hpp"

#include <httplib.h>

#include <json.hpp>

namespace triage {
namespace {

using nlohmann::json;

void reply_error(httplib::Response& res, int status, const std::string& what) {
  json body;
  body["error"] = what;
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

}  // namespace

void register_routes(httplib::Server& server, const ServeContext& context) {
  const Model* model = context.model;
  const auto model_id = model->fingerprint();

  server.Get("/health", [context, model_id](const httplib::Request&,
                                            httplib::Response& res) {
    json body;
    body["status"] = "ok";
    body["model"] = model_id;
    body["requests"] = context.requests->load();
    res.set_content(body.dump(), "application/json");
  });

  server.Post("/predict", [context, model](const httplib::Request& req,
                                           httplib::Response& res) {
    context.requests->fetch_add(1);
    json body;
    try {
      body = json::parse(req.body);
    } catch (const json::exception&) {
      reply_error(res, 400, "body must be JSON");
      return;
    }
    if (!body.is_object() || !body.contains("text") ||
        !body["text"].is_string()) {
      reply_error(res, 400, "missing string field 'text'");
      return;
    }
    const std::string text = body["text"].get<std::string>();
    if (text.empty()) {
      reply_error(res, 400, "'text' must not be empty");
      return;
    }
    if (text.size() > context.max_text_bytes) {
      reply_error(res, 413, "text exceeds " +
                                std::to_string(context.max_text_bytes) +
                                " bytes");
      return;
    }
    std::size_t k = context.default_k;
    if (body.contains("k")) {
      if (!body["k"].is_number_integer() || body["k"].get<int>() < 1) {
        reply_error(res, 400, "'k' must be a positive integer");
        return;
      }
      k = static_cast<std::size_t>(body["k"].get<int>());
    }

    Detection detection;
    if (context.profiles != nullptr && !context.profiles->empty()) {
      detection = detect(*context.profiles, text, context.langid);
    }

    const auto ranked = predict_topk(*model, text, k);
    json out;
    out["detected_lang"] = detection.lang;
    out["confidence"] = detection.confidence;
    auto& list = out["ranked"] = json::array();
    for (const auto& [class_id, prob] : ranked) {
      list.push_back({{"class", class_id}, {"prob", prob}});
    }
    res.set_content(out.dump(), "application/json");
  });
}

}  // namespace triage
