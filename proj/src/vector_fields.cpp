#include "geomlab/vector_fields.hpp"

#include <algorithm>

#include "geomlab/solitons.hpp"

namespace geomlab {

namespace {

RatMatrix nabla_columns(const MetricLieAlgebra& m, std::span<const Rational> v) {
  const std::size_t n = m.dimension();
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const RatVector col = m.connection().lambdas[i] * v;
    for (std::size_t k = 0; k < n; ++k) out(k, i) = col[k];
  }
  return out;
}

// beta(x, y) = sum_ij g^ij R(L_i x, y) u_j with R^l_ijk stored at (i, j, k, l).
RatVector curvature_pairing(const MetricLieAlgebra& m, const Tensor& r13, std::span<const Rational> x,
                            std::span<const Rational> y) {
  const std::size_t n = m.dimension();
  const RatMatrix nabla = nabla_columns(m, x);
  const RatMatrix& ginv = m.inverse_metric();
  RatVector out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (ginv(i, j).is_zero()) continue;
      // R(nabla_i x, y) u_j
      for (std::size_t a = 0; a < n; ++a) {
        if (nabla(a, i).is_zero()) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (y[b].is_zero()) continue;
          const Rational w = ginv(i, j) * nabla(a, i) * y[b];
          for (std::size_t l = 0; l < n; ++l) {
            const Rational& r = r13(a, b, j, l);
            if (!r.is_zero()) out[l] += w * r;
          }
        }
      }
    }
  return out;
}

bool linearly_dependent(std::span<const Rational> a, std::span<const Rational> b) {
  std::vector<RatVector> cols{RatVector(a.begin(), a.end()), RatVector(b.begin(), b.end())};
  return rank(RatMatrix::from_columns(cols, a.size())) <= 1;
}

RatMatrix basis_matrix(std::span<const RatVector> basis, std::size_t n) { return RatMatrix::from_columns(basis, n); }

}  // namespace

RatMatrix rough_laplacian_operator(const MetricLieAlgebra& m) {
  const std::size_t n = m.dimension();
  const auto& conn = m.connection();
  const RatMatrix& ginv = m.inverse_metric();
  RatMatrix op(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (ginv(i, j).is_zero()) continue;
      RatMatrix term = conn.lambdas[i] * conn.lambdas[j] - conn.along(conn.lambdas[i].column(j));
      op += term * ginv(i, j);
    }
  return op;
}

RatVector harmonic_map_curvature_term(const MetricLieAlgebra& m, std::span<const Rational> v) {
  const auto r13 = curvature(m).r13;
  return curvature_pairing(m, r13, v, v);
}

HarmonicityReport analyze_field(const MetricLieAlgebra& m, const InvariantVectorField& field) {
  const std::size_t n = m.dimension();
  const RatVector& v = field.coefficients;
  if (v.size() != n) throw DimensionMismatch("vector field has " + std::to_string(v.size()) + " coefficients, model has dimension " + std::to_string(n));
  HarmonicityReport rep;
  rep.nabla_v = nabla_columns(m, v);
  rep.rough_laplacian = rough_laplacian_operator(m) * v;
  rep.curvature_term = harmonic_map_curvature_term(m, v);
  rep.is_harmonic_section = is_zero(rep.rough_laplacian);
  rep.is_harmonic_map = rep.is_harmonic_section && is_zero(rep.curvature_term);
  rep.is_critical_constant_length = linearly_dependent(rep.rough_laplacian, v);
  rep.is_geodesic = is_zero(m.connection().covariant(v, v));
  rep.lie_derivative_metric = lie_derivative_of_metric(m, v);
  rep.is_killing = rep.lie_derivative_metric.is_zero();
  rep.is_parallel = rep.nabla_v.is_zero();
  rep.energy_density = (m.inverse_metric() * rep.nabla_v.transpose() * m.metric() * rep.nabla_v).trace();
  rep.squared_length = m.inner(v, v);
  return rep;
}

std::vector<RatVector> harmonic_section_space(const MetricLieAlgebra& m) {
  return nullspace(rough_laplacian_operator(m));
}

HarmonicMapClassification harmonic_map_classification(const MetricLieAlgebra& m) {
  HarmonicMapClassification out;
  out.subspace = harmonic_section_space(m);
  const auto r13 = curvature(m).r13;
  auto record = [&](RatVector v) {
    RatVector term = curvature_pairing(m, r13, v, v);
    if (!is_zero(term)) out.quadratic_obstruction_vanishes = false;
    out.witnesses.push_back({std::move(v), std::move(term)});
  };
  for (std::size_t a = 0; a < out.subspace.size(); ++a) record(out.subspace[a]);
  for (std::size_t a = 0; a < out.subspace.size(); ++a)
    for (std::size_t b = a + 1; b < out.subspace.size(); ++b) record(add(out.subspace[a], out.subspace[b]));
  return out;
}

std::vector<RatVector> parallel_fields(const MetricLieAlgebra& m) {
  const std::size_t n = m.dimension();
  RatMatrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(i * n + r, c) = m.connection().lambdas[i](r, c);
  return nullspace(stacked);
}

namespace {

// Largest subspace of span(basis) that the map `a` sends into itself.
std::vector<RatVector> invariant_core(const RatMatrix& a, std::vector<RatVector> basis, std::size_t n) {
  while (!basis.empty()) {
    const RatMatrix c = basis_matrix(basis, n);
    const RatMatrix ac = a * c;
    const std::size_t d = basis.size();
    RatMatrix sys(n, 2 * d);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < d; ++k) {
        sys(r, k) = ac(r, k);
        sys(r, d + k) = -c(r, k);
      }
    std::vector<RatVector> next;
    for (const auto& sol : nullspace(sys)) {
      RatVector y(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(d));
      RatVector x = c * y;
      if (!is_zero(x)) next.push_back(std::move(x));
    }
    next = independent_subset(next, n);
    if (next.size() == basis.size()) return basis;
    basis = std::move(next);
  }
  return basis;
}

// Matrix of `a` restricted to an invariant subspace, in the subspace's basis.
RatMatrix restrict_to(const RatMatrix& a, const std::vector<RatVector>& basis, std::size_t n) {
  const RatMatrix c = basis_matrix(basis, n);
  RatMatrix out(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto sol = solve_affine(c, a * basis[j]);
    for (std::size_t i = 0; i < basis.size(); ++i) out(i, j) = sol.particular[i];
  }
  return out;
}

// Signs of a congruence diagonalization of a symmetric matrix.
std::pair<bool, bool> signature_signs(RatMatrix g) {
  const std::size_t k = g.rows();
  bool pos = false, neg = false;
  for (std::size_t p = 0; p < k; ++p) {
    if (g(p, p).is_zero()) {
      std::size_t q = p + 1;
      while (q < k && g(q, q).is_zero()) ++q;
      if (q < k) {
        for (std::size_t j = 0; j < k; ++j) std::swap(g(p, j), g(q, j));
        for (std::size_t j = 0; j < k; ++j) std::swap(g(j, p), g(j, q));
      } else {
        q = p + 1;
        while (q < k && g(p, q).is_zero()) ++q;
        if (q == k) continue;  // row p is zero
        // e_p -> e_p + e_q gives a nonzero diagonal entry 2 g_pq
        for (std::size_t j = 0; j < k; ++j) g(p, j) += g(q, j);
        for (std::size_t j = 0; j < k; ++j) g(j, p) += g(j, q);
      }
    }
    const Rational piv = g(p, p);
    (piv.sign() > 0 ? pos : neg) = true;
    for (std::size_t r = p + 1; r < k; ++r) {
      if (g(r, p).is_zero()) continue;
      const Rational f = g(r, p) / piv;
      for (std::size_t j = 0; j < k; ++j) g(r, j) -= f * g(p, j);
      for (std::size_t j = 0; j < k; ++j) g(j, r) -= f * g(j, p);
    }
  }
  return {pos, neg};
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  const mpz_class num = x.numerator(), den = x.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(mpq_class(rn, rd));
}

void add_line(WalkerSearch& out, RatVector v) {
  for (const auto& l : out.lines)
    if (linearly_dependent(l, v)) return;
  out.lines.push_back(std::move(v));
}

// Null vectors of g on the common eigenspace `e`.
void collect_null_directions(const MetricLieAlgebra& m, const std::vector<RatVector>& e, WalkerSearch& out) {
  const std::size_t n = m.dimension();
  const RatMatrix c = basis_matrix(e, n);
  const RatMatrix gram = c.transpose() * m.metric() * c;
  const std::size_t k = e.size();
  if (gram.is_zero()) {
    if (k == 1) add_line(out, e[0]);
    else out.totally_null_subspaces.push_back(e);
    return;
  }
  if (k == 2) {
    const Rational a = gram(0, 0), b = gram(0, 1), cc = gram(1, 1);
    auto lift = [&](const Rational& y1, const Rational& y2) { add_line(out, add(scale(y1, e[0]), scale(y2, e[1]))); };
    if (a.is_zero()) {
      lift(1, 0);
      if (!b.is_zero()) lift(cc, Rational(-2) * b);
      return;
    }
    const Rational disc = b * b - a * cc;
    if (disc.sign() < 0) return;
    const auto s = rational_sqrt(disc);
    if (!s) {
      out.incomplete = true;
      return;
    }
    lift(-b + *s, a);
    lift(-b - *s, a);
    return;
  }
  const auto [pos, neg] = signature_signs(gram);
  // Semidefinite: the null vectors are exactly the radical.
  const auto radical = nullspace(gram);
  std::vector<RatVector> lifted;
  for (const auto& y : radical) lifted.push_back(c * y);
  if (lifted.size() == 1) add_line(out, lifted[0]);
  else if (lifted.size() > 1) out.totally_null_subspaces.push_back(lifted);
  if (pos && neg) out.incomplete = true;
}

void common_eigen_search(const MetricLieAlgebra& m, std::size_t depth, const std::vector<RatVector>& space,
                         WalkerSearch& out) {
  const std::size_t n = m.dimension();
  if (space.empty()) return;
  if (depth == n) {
    collect_null_directions(m, space, out);
    return;
  }
  const RatMatrix& a = m.connection().lambdas[depth];
  const auto core = invariant_core(a, space, n);
  if (core.empty()) return;
  const auto spectrum = rational_eigen(restrict_to(a, core, n));
  if (spectrum.has_irrational_factors) out.incomplete = true;
  const RatMatrix c = basis_matrix(core, n);
  for (const auto& es : spectrum.eigenspaces) {
    std::vector<RatVector> next;
    for (const auto& y : es.basis) next.push_back(c * y);
    common_eigen_search(m, depth + 1, next, out);
  }
}

}  // namespace

WalkerSearch parallel_null_line_fields(const MetricLieAlgebra& m) {
  WalkerSearch out;
  const std::size_t n = m.dimension();
  const auto [pos, neg] = signature_signs(m.metric());
  if (!(pos && neg)) return out;  // definite: no null vectors
  std::vector<RatVector> all;
  for (std::size_t i = 0; i < n; ++i) all.push_back(unit_vector(n, i));
  common_eigen_search(m, 0, all, out);
  return out;
}

EnergyReport energy_report(const MetricLieAlgebra& m, const InvariantVectorField& v, const Rational& volume) {
  if (volume.sign() <= 0) throw std::invalid_argument("volume must be positive, got " + volume.to_string());
  EnergyReport rep;
  const RatMatrix nabla = nabla_columns(m, v.coefficients);
  rep.density = (m.inverse_metric() * nabla.transpose() * m.metric() * nabla).trace();
  const Rational half(1, 2);
  rep.total = (Rational(static_cast<long>(m.dimension())) * half + half * rep.density) * volume;
  return rep;
}

}  // namespace geomlab
