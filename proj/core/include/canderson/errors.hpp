#pragma once

#include <stdexcept>
#include <string>

namespace canderson {

/// Base of every error thrown by the library. `kind()` is a stable
/// machine-readable tag used by the CLI error report.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class InvalidParameter : public Error {
 public:
  explicit InvalidParameter(const std::string& what) : Error("invalid-parameter", what) {}
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error("invalid-input", what) {}
};

/// A potential evaluation asked for an impurity the realization does not hold.
class CoverageError : public Error {
 public:
  explicit CoverageError(const std::string& what) : Error("coverage", what) {}
};

class EmptySelection : public Error {
 public:
  explicit EmptySelection(const std::string& what) : Error("empty-selection", what) {}
};

class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& what)
      : Error("config", what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("io", what) {}
};

/// Raised when a per-state inequality (xi <= gamma, ...) fails on ingestion.
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& what) : Error("invariant", what) {}
};

}  // namespace canderson
