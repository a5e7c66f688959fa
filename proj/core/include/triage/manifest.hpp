#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace triage {

// Written next to every artifact a command emits. Re-running the command
// with the same config and inputs must reproduce the artifacts byte for
// byte; created_utc is the one field excluded from that contract.
struct RunManifest {
  std::string command;
  std::vector<std::string> argv;
  std::string config_snapshot;  // normalized TOML
  std::map<std::string, std::string> inputs;   // path -> fingerprint
  std::map<std::string, std::string> outputs;  // path -> fingerprint
  std::uint64_t seed = 0;
  std::string tool_version;
  std::string created_utc;
};

// fnv over the file bytes, as "fnv:<hex>".
std::string file_fingerprint(const std::string& path);

std::string manifest_path(const std::string& artifact_path);
void write_manifest(const RunManifest& manifest, const std::string& path);

// Current time as RFC 3339 UTC.
std::string utc_now();

}  // namespace triage
