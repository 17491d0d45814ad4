#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "geomlab/linalg.hpp"

namespace geomlab {

/// Finite-dimensional real Lie algebra given by rational structure constants
/// [u_i, u_j] = sum_k c^k_ij u_k. Only pairs i < j are supplied; the reverse
/// order is antisymmetrized on access, so antisymmetry cannot be violated.
class LieAlgebraModel {
 public:
  /// Key (i, j) with i < j, value = coordinates of [u_i, u_j].
  using BracketTable = std::map<std::pair<std::size_t, std::size_t>, RatVector>;

  LieAlgebraModel() = default;
  LieAlgebraModel(std::vector<std::string> labels, const BracketTable& brackets);

  static LieAlgebraModel abelian(std::vector<std::string> labels);

  std::size_t dimension() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t index_of(const std::string& label) const;

  /// c^k_ij for any i, j (antisymmetric in i, j).
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dimension() + j) * dimension() + k];
  }
  /// Coordinates of [u_i, u_j].
  RatVector basis_bracket(std::size_t i, std::size_t j) const;
  /// The stored i < j table (nonzero entries only).
  BracketTable bracket_table() const;

  /// Matrix of ad_x: column j holds [x, u_j].
  RatMatrix ad(std::span<const Rational> x) const;
  RatMatrix ad_basis(std::size_t i) const;

  friend bool operator==(const LieAlgebraModel&, const LieAlgebraModel&) = default;

 private:
  std::vector<std::string> labels_;
  RatVector constants_;  // dense n^3, antisymmetric in the first two slots
};

RatVector bracket(const LieAlgebraModel& lie, std::span<const Rational> x, std::span<const Rational> y);

struct JacobiResult {
  bool holds = true;
  std::vector<std::array<std::size_t, 3>> violations;  // 0-based, i < j < k
};
JacobiResult jacobi_check(const LieAlgebraModel& lie);

/// B_ij = tr(ad_{u_i} ad_{u_j}).
RatMatrix killing_form(const LieAlgebraModel& lie);

std::vector<RatVector> center(const LieAlgebraModel& lie);

struct DerivationBasis {
  std::vector<RatMatrix> generators;
};

/// True iff D[u_i,u_j] = [D u_i, u_j] + [u_i, D u_j] on all basis pairs.
bool is_derivation(const LieAlgebraModel& lie, const RatMatrix& d);

/// Basis of Der(g), solving the Leibniz rule with the n^2 entries of D as unknowns.
DerivationBasis derivation_algebra(const LieAlgebraModel& lie);

}  // namespace geomlab
