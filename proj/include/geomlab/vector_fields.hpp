#pragma once

#include <vector>

#include "geomlab/geometry.hpp"

namespace geomlab {

/// Left-invariant vector field, by its coordinates in the model basis.
struct InvariantVectorField {
  RatVector coefficients;
};

struct HarmonicityReport {
  RatMatrix nabla_v;              // column i = nabla_{u_i} V
  RatVector rough_laplacian;      // g^ij (nabla_i nabla_j V - nabla_{nabla_i u_j} V)
  RatVector curvature_term;       // g^ij R(nabla_i V, V) u_j
  bool is_harmonic_section = false;
  bool is_harmonic_map = false;
  bool is_critical_constant_length = false;  // rough Laplacian and V linearly dependent
  bool is_geodesic = false;
  bool is_killing = false;
  bool is_parallel = false;
  RatMatrix lie_derivative_metric;
  Rational energy_density;        // |nabla V|^2 = g^ij g(nabla_i V, nabla_j V)
  Rational squared_length;        // g(V, V)
};

HarmonicityReport analyze_field(const MetricLieAlgebra& m, const InvariantVectorField& v);

/// Matrix of the linear map V -> rough Laplacian of V.
RatMatrix rough_laplacian_operator(const MetricLieAlgebra& m);

/// V -> g^ij R(nabla_i V, V) u_j, evaluated directly.
RatVector harmonic_map_curvature_term(const MetricLieAlgebra& m, std::span<const Rational> v);

/// Kernel of the rough Laplacian.
std::vector<RatVector> harmonic_section_space(const MetricLieAlgebra& m);

struct PolarizationWitness {
  RatVector vector;         // a basis vector or a sum of two
  RatVector curvature_term;
};

struct HarmonicMapClassification {
  std::vector<RatVector> subspace;
  bool quadratic_obstruction_vanishes = true;
  std::vector<PolarizationWitness> witnesses;  // every evaluation performed
};

HarmonicMapClassification harmonic_map_classification(const MetricLieAlgebra& m);

/// Intersection of the kernels of all connection endomorphisms.
std::vector<RatVector> parallel_fields(const MetricLieAlgebra& m);

struct WalkerSearch {
  std::vector<RatVector> lines;  // generators of parallel null lines, one per line
  /// Common eigenspaces of dimension >= 2 on which g vanishes identically;
  /// every line inside them qualifies.
  std::vector<std::vector<RatVector>> totally_null_subspaces;
  /// Set when irrational eigenvalues or an indefinite form in >= 3 variables
  /// could hide lines the rational search cannot see.
  bool incomplete = false;
};

WalkerSearch parallel_null_line_fields(const MetricLieAlgebra& m);

struct EnergyReport {
  Rational density;
  Rational total;
};

/// total = (n/2 + density/2) * volume. Throws std::invalid_argument for volume <= 0.
EnergyReport energy_report(const MetricLieAlgebra& m, const InvariantVectorField& v, const Rational& volume);

}  // namespace geomlab
