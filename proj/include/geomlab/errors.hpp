#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace geomlab {

enum class ModelErrorKind {
  DuplicateLabel,
  UnknownLabel,
  DuplicateBracket,
  AsymmetricMetric,
  SingularMetric,
  JacobiFailure,
  MalformedRational,
  MalformedDocument,
  UnknownModel,
  UnsupportedDimension,
  FileNotFound,
};

std::string_view to_string(ModelErrorKind kind);

/// Validation failure for a model or an analysis request. what() is
/// "<Kind>: <detail>".
class ModelError : public std::runtime_error {
 public:
  ModelError(ModelErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ModelErrorKind kind() const { return kind_; }

 private:
  ModelErrorKind kind_;
};

}  // namespace geomlab
