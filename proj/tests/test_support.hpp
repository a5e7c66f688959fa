#pragma once

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <string>
#include <tuple>
#include <vector>

#include "triage/claim.hpp"

namespace triage::testing {

// Hand-built corpus helper: rows of (id, text, lang, class). Label space is
// sized to the largest class id unless num_classes says otherwise.
inline Corpus make_corpus(
    const std::vector<std::tuple<std::string, std::string, std::string, int>>&
        rows,
    std::size_t num_classes = 0) {
  Corpus corpus;
  int max_class = -1;
  for (const auto& [id, text, lang, class_id] : rows) {
    Claim claim;
    claim.id = id;
    claim.text = text;
    claim.lang = lang;
    claim.class_id = class_id;
    max_class = std::max(max_class, class_id);
    corpus.claims.push_back(std::move(claim));
  }
  const std::size_t size =
      num_classes > 0 ? num_classes : static_cast<std::size_t>(max_class + 1);
  corpus.label_names.assign(size, "");
  return corpus;
}

// Unique scratch directory under the build tree, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("triage-test-" + tag + "-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  std::string file(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

}  // namespace triage::testing
