#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "geomlab/errors.hpp"
#include "geomlab/kernels.hpp"
#include "geomlab/lie_algebra.hpp"
#include "geomlab/tensor.hpp"

namespace geomlab {

/// Levi-Civita connection of a left-invariant metric, as n endomorphisms:
/// lambdas[i](k, j) is the u_k-coefficient of nabla_{u_i} u_j.
struct ConnectionCoefficients {
  std::vector<RatMatrix> lambdas;

  std::size_t dimension() const { return lambdas.size(); }
  /// L_x = sum_i x^i lambdas[i], i.e. y -> nabla_x y.
  RatMatrix along(std::span<const Rational> x) const;
  RatVector covariant(std::span<const Rational> x, std::span<const Rational> y) const;
};

/// A Lie algebra with a nondegenerate symmetric bilinear form, i.e. a
/// left-invariant pseudo-Riemannian metric on the simply connected group.
/// Construction validates the Jacobi identity and the metric.
class MetricLieAlgebra {
 public:
  MetricLieAlgebra(LieAlgebraModel algebra, RatMatrix metric);

  const LieAlgebraModel& algebra() const { return algebra_; }
  const RatMatrix& metric() const { return metric_; }
  const RatMatrix& inverse_metric() const { return inverse_metric_; }
  const ConnectionCoefficients& connection() const { return connection_; }
  std::size_t dimension() const { return algebra_.dimension(); }
  const std::vector<std::string>& labels() const { return algebra_.labels(); }

  Rational inner(std::span<const Rational> x, std::span<const Rational> y) const;

  friend bool operator==(const MetricLieAlgebra& a, const MetricLieAlgebra& b) {
    return a.algebra_ == b.algebra_ && a.metric_ == b.metric_;
  }

 private:
  LieAlgebraModel algebra_;
  RatMatrix metric_;
  RatMatrix inverse_metric_;
  ConnectionCoefficients connection_;
};

struct CurvatureData {
  Tensor r13;  // (i, j, k, l) -> R^l_ijk, the u_l-coefficient of R(u_i,u_j)u_k
  Tensor r04;  // (i, j, k, l) -> R_ijkl = g(R(u_i,u_j)u_k, u_l)
};

struct RicciData {
  RatMatrix rho;              // rho_ij
  RatMatrix ricci_operator;   // Rc^i_j = g^ik rho_kj
  Rational scalar;            // g^ij rho_ij
};

struct LedgerResult {
  bool l3 = true;
  bool l5 = true;
  bool locally_symmetric = true;
  std::optional<std::array<std::size_t, 3>> l3_witness;     // basis triple with nonzero cyclic sum
  std::optional<std::vector<std::size_t>> l5_witness;       // monomial with nonzero coefficient
  std::optional<std::array<std::size_t, 5>> nabla_r_witness;
};

/// Koszul formula: 2 g(nabla_x y, z) = g([x,y],z) - g([y,z],x) + g([z,x],y).
ConnectionCoefficients levi_civita(const LieAlgebraModel& algebra, const RatMatrix& metric,
                                   const RatMatrix& inverse_metric);
inline const ConnectionCoefficients& levi_civita(const MetricLieAlgebra& m) { return m.connection(); }

/// R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_[x,y] z.
CurvatureData curvature(const MetricLieAlgebra& m);

/// rho(y,z) = tr(x -> R(x,y)z).
RicciData ricci(const MetricLieAlgebra& m);

/// Fully covariant Weyl tensor C_ijkl (same slot convention as r04). Throws
/// ModelError(UnsupportedDimension) for n <= 3.
Tensor weyl(const MetricLieAlgebra& m);

/// (nabla_{u_i} T)(u_j1, ..., u_jk) stored at (i, j1, ..., jk) for an invariant covariant T.
Tensor covariant_derivative_tensor(const MetricLieAlgebra& m, const Tensor& t);

LedgerResult ledger_conditions(const MetricLieAlgebra& m);

/// g([x,y],z) + g(y,[x,z]) = 0 on all basis triples.
bool biinvariance_check(const MetricLieAlgebra& m);

/// New model in the basis whose vectors are the columns of B (old coordinates).
/// Labels default to e1..en.
MetricLieAlgebra change_of_basis(const MetricLieAlgebra& m, const RatMatrix& b,
                                 std::optional<std::vector<std::string>> labels = std::nullopt);

/// Raises the last slot of a covariant tensor with g^{-1}.
Tensor raise_last(const Tensor& t, const RatMatrix& inverse_metric);
/// Lowers the last slot with g.
Tensor lower_last(const Tensor& t, const RatMatrix& metric);

/// Contraction g^{ab} T(.., a, .., b, ..) over slots p < q.
Tensor metric_trace(const Tensor& t, const RatMatrix& inverse_metric, std::size_t p, std::size_t q);

}  // namespace geomlab
