#include "geomlab/errors.hpp"

namespace geomlab {

std::string_view to_string(ModelErrorKind kind) {
  switch (kind) {
    case ModelErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ModelErrorKind::UnknownLabel: return "UnknownLabel";
    case ModelErrorKind::DuplicateBracket: return "DuplicateBracket";
    case ModelErrorKind::AsymmetricMetric: return "AsymmetricMetric";
    case ModelErrorKind::SingularMetric: return "SingularMetric";
    case ModelErrorKind::JacobiFailure: return "JacobiFailure";
    case ModelErrorKind::MalformedRational: return "MalformedRational";
    case ModelErrorKind::MalformedDocument: return "MalformedDocument";
    case ModelErrorKind::UnknownModel: return "UnknownModel";
    case ModelErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ModelErrorKind::FileNotFound: return "FileNotFound";
  }
  return "ModelError";
}

}  // namespace geomlab
