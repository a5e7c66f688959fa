#pragma once

#include <atomic>
#include <cstdint>
#include <memory>

#include "triage/clf.hpp"
#include "triage/langid.hpp"

namespace httplib {
class Server;
}

namespace triage {

// Wiring for the prediction service. The model and profiles are immutable
// once loaded; the request counter is the only mutable state.
struct ServeContext {
  const Model* model = nullptr;
  const std::vector<LanguageProfile>* profiles = nullptr;  // optional
  LangIdOptions langid;
  std::size_t default_k = 5;
  std::size_t max_text_bytes = 16 * 1024;
  std::shared_ptr<std::atomic<std::uint64_t>> requests =
      std::make_shared<std::atomic<std::uint64_t>>(0);
};

// Registers POST /predict {"text", "k"?} -> {"detected_lang", "confidence",
// "ranked": [{"class", "prob"}]} and GET /health -> {"status", "model",
// "requests"}. Malformed requests get 400, oversized text 413.
void register_routes(httplib::Server& server, const ServeContext& context);

}  // namespace triage
