#pragma once

namespace triage {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace triage
