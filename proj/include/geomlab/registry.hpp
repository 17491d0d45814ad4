#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "geomlab/geometry.hpp"

namespace geomlab {

inline constexpr std::string_view kModelSchema = "geomlab-model/1";

/// A validated model file: the metric Lie algebra plus document metadata.
struct LoadedModel {
  std::string name;
  MetricLieAlgebra space;
  std::optional<RatMatrix> frame;   // columns: pseudo-orthonormal frame in model coordinates
  std::optional<Rational> volume;

  friend bool operator==(const LoadedModel&, const LoadedModel&) = default;
};

/// Validates a model document (see README for the schema). Throws ModelError.
LoadedModel load_model(const nlohmann::json& document);
LoadedModel load_model_file(const std::filesystem::path& path);

/// Canonical document for a model; load_model(serialize_model(m)) == m.
nlohmann::json serialize_model(const LoadedModel& model);
nlohmann::json serialize_model(const MetricLieAlgebra& space, const std::string& name);

/// oscillator, oscillator-frame, heisenberg3, abelian4-minkowski, su2xR.
const std::vector<std::string>& builtin_names();
LoadedModel builtin(const std::string& name);

}  // namespace geomlab
