#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "geomlab/geometry.hpp"

namespace geomlab {

/// Sign classification of a soliton constant: positive is shrinking, zero
/// steady, negative expanding (L_X g = s g - rho orientation).
enum class SolitonClass { Shrinking, Steady, Expanding };

std::string_view to_string(SolitonClass c);
SolitonClass classify_constant(const Rational& constant);

enum class SolitonKind { Einstein, InvariantRicci, AlgebraicRicci };

std::string_view to_string(SolitonKind k);

/// Outcome of one solver. `system` is the exact linear system that was solved,
/// so infeasibility is certified by solution.rank < solution.augmented_rank.
struct SolitonVerdict {
  SolitonKind kind = SolitonKind::Einstein;
  bool feasible = false;
  std::optional<Rational> constant;
  std::optional<SolitonClass> soliton_class;

  AffineSolution solution;  // raw solution in the solver's unknowns

  // InvariantRicci: particular soliton field X (constant is the matching s).
  std::optional<RatVector> field;
  // AlgebraicRicci: particular derivation D, and the derivation basis the
  // coordinates refer to.
  std::optional<RatMatrix> derivation;
  std::vector<RatMatrix> derivation_basis;
  // Whether the witness re-verified through the geometry layer.
  bool plug_back_verified = false;
};

/// rho = lambda g.
SolitonVerdict einstein_solve(const MetricLieAlgebra& m);

/// (L_X g)(u_j,u_k) = s g_jk - rho_jk for X in g and s in Q. Unknowns (X, s),
/// s last.
SolitonVerdict invariant_ricci_soliton_solve(const MetricLieAlgebra& m);

/// Rc = c Id + D with D in Der(g). Unknowns (c, coordinates of D in the
/// derivation basis), c first.
SolitonVerdict algebraic_ricci_soliton_solve(const MetricLieAlgebra& m);

/// (L_X g)_jk = g(nabla_j X, u_k) + g(u_j, nabla_k X).
RatMatrix lie_derivative_of_metric(const MetricLieAlgebra& m, std::span<const Rational> x);

/// Re-evaluation of each defining equation from scratch.
bool verify_einstein(const MetricLieAlgebra& m, const Rational& lambda);
bool verify_invariant_soliton(const MetricLieAlgebra& m, std::span<const Rational> x, const Rational& s);
bool verify_algebraic_soliton(const MetricLieAlgebra& m, const Rational& c, const RatMatrix& d);

}  // namespace geomlab
