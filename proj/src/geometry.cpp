#include "geomlab/geometry.hpp"

#include <algorithm>

namespace geomlab {

RatMatrix ConnectionCoefficients::along(std::span<const Rational> x) const {
  const std::size_t n = dimension();
  if (x.size() != n) throw DimensionMismatch("connection: vector length mismatch");
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    if (!x[i].is_zero()) m += lambdas[i] * x[i];
  return m;
}

RatVector ConnectionCoefficients::covariant(std::span<const Rational> x, std::span<const Rational> y) const {
  return along(x) * y;
}

MetricLieAlgebra::MetricLieAlgebra(LieAlgebraModel algebra, RatMatrix metric)
    : algebra_(std::move(algebra)), metric_(std::move(metric)) {
  const std::size_t n = algebra_.dimension();
  if (metric_.rows() != n || metric_.cols() != n) {
    throw DimensionMismatch("metric must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (metric_(i, j) != metric_(j, i)) {
        throw ModelError(ModelErrorKind::AsymmetricMetric,
                         "g(" + algebra_.labels()[i] + "," + algebra_.labels()[j] + ") = " +
                             metric_(i, j).to_string() + " but g(" + algebra_.labels()[j] + "," +
                             algebra_.labels()[i] + ") = " + metric_(j, i).to_string());
      }
  try {
    inverse_metric_ = matrix_inverse(metric_);
  } catch (const SingularMatrix&) {
    throw ModelError(ModelErrorKind::SingularMetric, "metric has determinant 0");
  }
  const auto jacobi = jacobi_check(algebra_);
  if (!jacobi.holds) {
    const auto& t = jacobi.violations.front();
    const auto& l = algebra_.labels();
    throw ModelError(ModelErrorKind::JacobiFailure,
                     "Jacobi identity fails at (" + l[t[0]] + ", " + l[t[1]] + ", " + l[t[2]] + ")");
  }
  connection_ = levi_civita(algebra_, metric_, inverse_metric_);
}

Rational MetricLieAlgebra::inner(std::span<const Rational> x, std::span<const Rational> y) const {
  return dot(x, metric_ * y);
}

ConnectionCoefficients levi_civita(const LieAlgebraModel& algebra, const RatMatrix& metric,
                                   const RatMatrix& inverse_metric) {
  const std::size_t n = algebra.dimension();
  // lowered(i, j, l) = g([u_i,u_j], u_l)
  Tensor lowered(n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        Rational s;
        for (std::size_t k = 0; k < n; ++k)
          if (!algebra.constant(i, j, k).is_zero()) s += algebra.constant(i, j, k) * metric(k, l);
        lowered(i, j, l) = std::move(s);
      }
  const Rational half(1, 2);
  ConnectionCoefficients conn;
  conn.lambdas.assign(n, RatMatrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RatVector koszul(n);  // g(nabla_i u_j, u_l)
      for (std::size_t l = 0; l < n; ++l)
        koszul[l] = half * (lowered(i, j, l) - lowered(j, l, i) + lowered(l, i, j));
      const RatVector coords = inverse_metric * koszul;
      for (std::size_t k = 0; k < n; ++k) conn.lambdas[i](k, j) = coords[k];
    }
  return conn;
}

Tensor lower_last(const Tensor& t, const RatMatrix& metric) {
  const std::size_t n = t.dim();
  Tensor out(n, t.rank());
  for (std::size_t k = 0; k < out.size(); ++k) {
    auto idx = out.unflat(k);
    const std::size_t l = idx.back();
    Rational s;
    for (std::size_t m = 0; m < n; ++m) {
      if (metric(m, l).is_zero()) continue;
      idx.back() = m;
      s += t.at(idx) * metric(m, l);
    }
    out.flat_at(k) = std::move(s);
  }
  return out;
}

Tensor raise_last(const Tensor& t, const RatMatrix& inverse_metric) { return lower_last(t, inverse_metric); }

Tensor metric_trace(const Tensor& t, const RatMatrix& inverse_metric, std::size_t p, std::size_t q) {
  if (p >= q || q >= t.rank()) throw std::invalid_argument("metric_trace: need slots p < q < rank");
  const std::size_t n = t.dim();
  Tensor out(n, t.rank() - 2);
  for (std::size_t k = 0; k < out.size(); ++k) {
    const auto rest = out.unflat(k);
    std::vector<std::size_t> idx;
    idx.reserve(t.rank());
    std::size_t r = 0;
    for (std::size_t s = 0; s < t.rank(); ++s) idx.push_back(s == p || s == q ? 0 : rest[r++]);
    Rational sum;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (inverse_metric(a, b).is_zero()) continue;
        idx[p] = a;
        idx[q] = b;
        sum += inverse_metric(a, b) * t.at(idx);
      }
    out.flat_at(k) = std::move(sum);
  }
  return out;
}

CurvatureData curvature(const MetricLieAlgebra& m) {
  CurvatureData data;
  data.r13 = kernels::parallel::curvature_endomorphisms(m.algebra(), m.connection().lambdas);
  data.r04 = lower_last(data.r13, m.metric());
  return data;
}

RicciData ricci(const MetricLieAlgebra& m) {
  const std::size_t n = m.dimension();
  const auto r13 = kernels::parallel::curvature_endomorphisms(m.algebra(), m.connection().lambdas);
  RicciData data;
  data.rho = RatMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Rational s;
      for (std::size_t i = 0; i < n; ++i) s += r13(i, j, k, i);
      data.rho(j, k) = std::move(s);
    }
  data.ricci_operator = m.inverse_metric() * data.rho;
  data.scalar = data.ricci_operator.trace();
  return data;
}

Tensor weyl(const MetricLieAlgebra& m) {
  const std::size_t n = m.dimension();
  if (n <= 3) {
    throw ModelError(ModelErrorKind::UnsupportedDimension,
                     "Weyl tensor needs dimension >= 4, got " + std::to_string(n));
  }
  const auto curv = curvature(m);
  const auto ric = ricci(m);
  const auto& g = m.metric();
  const auto& rho = ric.rho;
  const Rational a = Rational(1) / Rational(static_cast<long>(n - 2));
  const Rational b = ric.scalar / Rational(static_cast<long>((n - 1) * (n - 2)));
  Tensor c(n, 4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Rational ricci_part = rho(j, k) * g(i, l) + rho(i, l) * g(j, k) - rho(i, k) * g(j, l) -
                                      rho(j, l) * g(i, k);
          const Rational metric_part = g(j, k) * g(i, l) - g(i, k) * g(j, l);
          c(i, j, k, l) = curv.r04(i, j, k, l) - a * ricci_part + b * metric_part;
        }
  return c;
}

Tensor covariant_derivative_tensor(const MetricLieAlgebra& m, const Tensor& t) {
  if (t.dim() != m.dimension()) throw DimensionMismatch("tensor dimension does not match the model");
  return kernels::parallel::covariant_derivative(m.connection().lambdas, t);
}

LedgerResult ledger_conditions(const MetricLieAlgebra& m) {
  const std::size_t n = m.dimension();
  LedgerResult result;
  const auto ric = ricci(m);
  const auto nabla_rho = covariant_derivative_tensor(m, tensor_from_matrix(ric.rho));
  for (std::size_t i = 0; i < n && result.l3; ++i)
    for (std::size_t j = i; j < n && result.l3; ++j)
      for (std::size_t k = j; k < n && result.l3; ++k) {
        const Rational s = nabla_rho(i, j, k) + nabla_rho(j, k, i) + nabla_rho(k, i, j);
        if (!s.is_zero()) {
          result.l3 = false;
          result.l3_witness = std::array<std::size_t, 3>{i, j, k};
        }
      }
  const auto curv = curvature(m);
  const auto nabla_r = covariant_derivative_tensor(m, curv.r04);
  for (std::size_t k = 0; k < nabla_r.size(); ++k) {
    if (!nabla_r.flat_at(k).is_zero()) {
      result.locally_symmetric = false;
      const auto idx = nabla_r.unflat(k);
      result.nabla_r_witness = std::array<std::size_t, 5>{idx[0], idx[1], idx[2], idx[3], idx[4]};
      break;
    }
  }
  if (!result.locally_symmetric) {
    const auto form = kernels::parallel::ledger_l5_form(m.inverse_metric(), curv.r04, nabla_r);
    if (!form.empty()) {
      result.l5 = false;
      result.l5_witness = form.begin()->first;
    }
  }
  return result;
}

bool biinvariance_check(const MetricLieAlgebra& m) {
  const std::size_t n = m.dimension();
  const auto& lie = m.algebra();
  for (std::size_t x = 0; x < n; ++x) {
    const RatMatrix ad = lie.ad_basis(x);
    // g(ad y, z) + g(y, ad z) = 0  <=>  ad^T g + g ad = 0
    if (!(ad.transpose() * m.metric() + m.metric() * ad).is_zero()) return false;
  }
  return true;
}

MetricLieAlgebra change_of_basis(const MetricLieAlgebra& m, const RatMatrix& b,
                                 std::optional<std::vector<std::string>> labels) {
  const std::size_t n = m.dimension();
  if (b.rows() != n || b.cols() != n) throw DimensionMismatch("change of basis must be n x n");
  const RatMatrix binv = matrix_inverse(b);  // throws SingularMatrix
  std::vector<std::string> names;
  if (labels) {
    if (labels->size() != n) throw DimensionMismatch("wrong number of labels for change of basis");
    names = *labels;
  } else {
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  }
  const auto& lie = m.algebra();
  LieAlgebraModel::BracketTable table;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c) {
      const RatVector br = bracket(lie, b.column(a), b.column(c));
      RatVector coords = binv * br;
      if (!is_zero(coords)) table.emplace(std::make_pair(a, c), std::move(coords));
    }
  RatMatrix metric = b.transpose() * m.metric() * b;
  return MetricLieAlgebra(LieAlgebraModel(std::move(names), table), std::move(metric));
}

}  // namespace geomlab
