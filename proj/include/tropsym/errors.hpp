#pragma once

#include <stdexcept>
#include <string>

namespace tropsym {

/// Violation of a mathematical precondition (bad lengths, wrong degree,
/// loop edges where a loop-free model is required, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally malformed input. `path` is a JSON-pointer-like location of
/// the offending field, empty when not applicable.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message),
        path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace tropsym
