#pragma once

#include <stdexcept>
#include <string>

namespace triage {

// Bad configuration or bad user input. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// File or wire-format problems. Exit code 1.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Failures during model training (degenerate corpus, diverging loss).
class TrainError : public std::runtime_error {
 public:
  explicit TrainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace triage
