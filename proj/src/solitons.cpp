#include "geomlab/solitons.hpp"

namespace geomlab {

std::string_view to_string(SolitonClass c) {
  switch (c) {
    case SolitonClass::Shrinking: return "shrinking";
    case SolitonClass::Steady: return "steady";
    case SolitonClass::Expanding: return "expanding";
  }
  return "unknown";
}

SolitonClass classify_constant(const Rational& constant) {
  if (constant.sign() > 0) return SolitonClass::Shrinking;
  if (constant.sign() < 0) return SolitonClass::Expanding;
  return SolitonClass::Steady;
}

std::string_view to_string(SolitonKind k) {
  switch (k) {
    case SolitonKind::Einstein: return "einstein";
    case SolitonKind::InvariantRicci: return "invariant_ricci_soliton";
    case SolitonKind::AlgebraicRicci: return "algebraic_ricci_soliton";
  }
  return "unknown";
}

RatMatrix lie_derivative_of_metric(const MetricLieAlgebra& m, std::span<const Rational> x) {
  const std::size_t n = m.dimension();
  // column j of nabla = nabla_{u_j} X
  RatMatrix nabla(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const RatVector col = m.connection().lambdas[j] * x;
    for (std::size_t k = 0; k < n; ++k) nabla(k, j) = col[k];
  }
  const RatMatrix lowered = m.metric() * nabla;  // (k, j) -> g(u_k, nabla_j X)
  return lowered.transpose() + lowered;
}

namespace {

// Index pairs j <= k of a symmetric n x n system.
std::vector<std::pair<std::size_t, std::size_t>> upper_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j; k < n; ++k) out.emplace_back(j, k);
  return out;
}

}  // namespace

bool verify_einstein(const MetricLieAlgebra& m, const Rational& lambda) {
  return ricci(m).rho == m.metric() * lambda;
}

bool verify_invariant_soliton(const MetricLieAlgebra& m, std::span<const Rational> x, const Rational& s) {
  return lie_derivative_of_metric(m, x) == m.metric() * s - ricci(m).rho;
}

bool verify_algebraic_soliton(const MetricLieAlgebra& m, const Rational& c, const RatMatrix& d) {
  if (!is_derivation(m.algebra(), d)) return false;
  return ricci(m).ricci_operator == RatMatrix::identity(m.dimension()) * c + d;
}

SolitonVerdict einstein_solve(const MetricLieAlgebra& m) {
  const std::size_t n = m.dimension();
  const auto rho = ricci(m).rho;
  const auto pairs = upper_pairs(n);
  RatMatrix a(pairs.size(), 1);
  RatVector b(pairs.size());
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    a(r, 0) = m.metric()(pairs[r].first, pairs[r].second);
    b[r] = rho(pairs[r].first, pairs[r].second);
  }
  SolitonVerdict v;
  v.kind = SolitonKind::Einstein;
  v.solution = solve_affine(a, b);
  v.feasible = v.solution.feasible;
  if (v.feasible) {
    v.constant = v.solution.particular[0];
    v.soliton_class = classify_constant(*v.constant);
    v.plug_back_verified = verify_einstein(m, *v.constant);
  }
  return v;
}

SolitonVerdict invariant_ricci_soliton_solve(const MetricLieAlgebra& m) {
  const std::size_t n = m.dimension();
  const auto rho = ricci(m).rho;
  const auto pairs = upper_pairs(n);
  std::vector<RatMatrix> lie_derivs;
  for (std::size_t i = 0; i < n; ++i) lie_derivs.push_back(lie_derivative_of_metric(m, unit_vector(n, i)));
  // sum_i X^i (L_{u_i} g)_jk - s g_jk = -rho_jk
  RatMatrix a(pairs.size(), n + 1);
  RatVector b(pairs.size());
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    const auto [j, k] = pairs[r];
    for (std::size_t i = 0; i < n; ++i) a(r, i) = lie_derivs[i](j, k);
    a(r, n) = -m.metric()(j, k);
    b[r] = -rho(j, k);
  }
  SolitonVerdict v;
  v.kind = SolitonKind::InvariantRicci;
  v.solution = solve_affine(a, b);
  v.feasible = v.solution.feasible;
  if (v.feasible) {
    RatVector x(v.solution.particular.begin(), v.solution.particular.begin() + static_cast<std::ptrdiff_t>(n));
    v.constant = v.solution.particular[n];
    v.soliton_class = classify_constant(*v.constant);
    v.plug_back_verified = verify_invariant_soliton(m, x, *v.constant);
    for (const auto& k : v.solution.kernel_basis) {
      RatVector kx(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(n));
      RatVector shifted = add(x, kx);
      v.plug_back_verified = v.plug_back_verified && verify_invariant_soliton(m, shifted, *v.constant + k[n]);
    }
    v.field = std::move(x);
  }
  return v;
}

SolitonVerdict algebraic_ricci_soliton_solve(const MetricLieAlgebra& m) {
  const std::size_t n = m.dimension();
  const auto rc = ricci(m).ricci_operator;
  const auto der = derivation_algebra(m.algebra());
  const std::size_t unknowns = 1 + der.generators.size();
  // c I + sum_t y_t D_t = Rc, entrywise
  RatMatrix a(n * n, unknowns);
  RatVector b(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t row = r * n + c;
      if (r == c) a(row, 0) = 1;
      for (std::size_t t = 0; t < der.generators.size(); ++t) a(row, 1 + t) = der.generators[t](r, c);
      b[row] = rc(r, c);
    }
  SolitonVerdict v;
  v.kind = SolitonKind::AlgebraicRicci;
  v.derivation_basis = der.generators;
  v.solution = solve_affine(a, b);
  v.feasible = v.solution.feasible;
  if (v.feasible) {
    auto combine = [&](std::span<const Rational> coords) {
      RatMatrix d(n, n);
      for (std::size_t t = 0; t < der.generators.size(); ++t)
        if (!coords[1 + t].is_zero()) d += der.generators[t] * coords[1 + t];
      return d;
    };
    const Rational c = v.solution.particular[0];
    RatMatrix d = combine(v.solution.particular);
    v.constant = c;
    v.soliton_class = classify_constant(c);
    v.plug_back_verified = verify_algebraic_soliton(m, c, d);
    for (const auto& k : v.solution.kernel_basis) {
      const RatVector shifted = add(v.solution.particular, k);
      v.plug_back_verified = v.plug_back_verified && verify_algebraic_soliton(m, shifted[0], combine(shifted));
    }
    v.derivation = std::move(d);
  }
  return v;
}

}  // namespace geomlab
