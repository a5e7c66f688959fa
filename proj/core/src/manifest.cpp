#include "triage/manifest.hpp"

#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "triage/errors.hpp"
#include "triage/text.hpp"
#include "triage/version.hpp"

namespace triage {

std::string file_fingerprint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot fingerprint missing file: " + path);
  std::uint64_t h = kFnvOffset;
  char buffer[1 << 16];
  while (in.read(buffer, sizeof(buffer)) || in.gcount() > 0) {
    h = fnv1a64(std::string_view(buffer, static_cast<std::size_t>(in.gcount())),
                h);
    if (!in) break;
  }
  return "fnv:" + to_hex(h);
}

std::string manifest_path(const std::string& artifact_path) {
  return artifact_path + ".manifest.json";
}

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buffer;
}

void write_manifest(const RunManifest& manifest, const std::string& path) {
  nlohmann::ordered_json doc;
  doc["schema"] = "run-manifest-v1";
  doc["command"] = manifest.command;
  doc["argv"] = manifest.argv;
  doc["config"] = manifest.config_snapshot;
  doc["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [file, fingerprint] : manifest.inputs) {
    doc["inputs"][file] = fingerprint;
  }
  doc["outputs"] = nlohmann::ordered_json::object();
  for (const auto& [file, fingerprint] : manifest.outputs) {
    doc["outputs"][file] = fingerprint;
  }
  doc["seed"] = manifest.seed;
  doc["tool_version"] =
      manifest.tool_version.empty() ? kToolVersion : manifest.tool_version;
  doc["created_utc"] = manifest.created_utc;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write manifest: " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace triage
