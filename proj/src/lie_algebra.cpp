#include "geomlab/lie_algebra.hpp"

#include <algorithm>
#include <set>

namespace geomlab {

LieAlgebraModel::LieAlgebraModel(std::vector<std::string> labels, const BracketTable& brackets)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n) {
    throw std::invalid_argument("basis labels must be distinct");
  }
  constants_.assign(n * n * n, Rational());
  for (const auto& [key, value] : brackets) {
    const auto [i, j] = key;
    if (i >= j || j >= n) throw std::invalid_argument("bracket table keys must satisfy i < j < n");
    if (value.size() != n) throw DimensionMismatch("bracket value has wrong length");
    for (std::size_t k = 0; k < n; ++k) {
      constants_[(i * n + j) * n + k] = value[k];
      constants_[(j * n + i) * n + k] = -value[k];
    }
  }
}

LieAlgebraModel LieAlgebraModel::abelian(std::vector<std::string> labels) {
  return LieAlgebraModel(std::move(labels), {});
}

std::size_t LieAlgebraModel::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::out_of_range("unknown basis label '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

RatVector LieAlgebraModel::basis_bracket(std::size_t i, std::size_t j) const {
  const std::size_t n = dimension();
  RatVector v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = constant(i, j, k);
  return v;
}

LieAlgebraModel::BracketTable LieAlgebraModel::bracket_table() const {
  BracketTable table;
  for (std::size_t i = 0; i < dimension(); ++i)
    for (std::size_t j = i + 1; j < dimension(); ++j) {
      auto v = basis_bracket(i, j);
      if (!is_zero(v)) table.emplace(std::make_pair(i, j), std::move(v));
    }
  return table;
}

RatMatrix LieAlgebraModel::ad(std::span<const Rational> x) const {
  const std::size_t n = dimension();
  if (x.size() != n) throw DimensionMismatch("ad: vector length mismatch");
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!constant(i, j, k).is_zero()) m(k, j) += x[i] * constant(i, j, k);
  }
  return m;
}

RatMatrix LieAlgebraModel::ad_basis(std::size_t i) const { return ad(unit_vector(dimension(), i)); }

RatVector bracket(const LieAlgebraModel& lie, std::span<const Rational> x, std::span<const Rational> y) {
  if (y.size() != lie.dimension()) throw DimensionMismatch("bracket: vector length mismatch");
  return lie.ad(x) * y;
}

JacobiResult jacobi_check(const LieAlgebraModel& lie) {
  const std::size_t n = lie.dimension();
  JacobiResult result;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto ui = unit_vector(n, i), uj = unit_vector(n, j), uk = unit_vector(n, k);
        auto sum = bracket(lie, lie.basis_bracket(i, j), uk);
        sum = add(sum, bracket(lie, lie.basis_bracket(j, k), ui));
        sum = add(sum, bracket(lie, lie.basis_bracket(k, i), uj));
        if (!is_zero(sum)) {
          result.holds = false;
          result.violations.push_back({i, j, k});
        }
      }
  return result;
}

RatMatrix killing_form(const LieAlgebraModel& lie) {
  const std::size_t n = lie.dimension();
  std::vector<RatMatrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(lie.ad_basis(i));
  RatMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      b(i, j) = (ads[i] * ads[j]).trace();
      b(j, i) = b(i, j);
    }
  return b;
}

std::vector<RatVector> center(const LieAlgebraModel& lie) {
  const std::size_t n = lie.dimension();
  // rows indexed by (i, k): sum_m x^m c^k_{m i} = 0
  RatMatrix a(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t m = 0; m < n; ++m) a(i * n + k, m) = lie.constant(m, i, k);
  return nullspace(a);
}

bool is_derivation(const LieAlgebraModel& lie, const RatMatrix& d) {
  const std::size_t n = lie.dimension();
  if (d.rows() != n || d.cols() != n) throw DimensionMismatch("derivation has wrong shape");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto lhs = d * lie.basis_bracket(i, j);
      const auto rhs = add(bracket(lie, d.column(i), unit_vector(n, j)),
                           bracket(lie, unit_vector(n, i), d.column(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

DerivationBasis derivation_algebra(const LieAlgebraModel& lie) {
  const std::size_t n = lie.dimension();
  // unknown index of D^a_b (row a, column b) is a * n + b
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  RatMatrix sys(pairs * n, n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m, ++row) {
        for (std::size_t k = 0; k < n; ++k) {
          // D[u_i,u_j]: sum_k c^k_ij D^m_k
          sys(row, m * n + k) += lie.constant(i, j, k);
          // -[D u_i, u_j]: -sum_k D^k_i c^m_kj
          sys(row, k * n + i) -= lie.constant(k, j, m);
          // -[u_i, D u_j]: -sum_k D^k_j c^m_ik
          sys(row, k * n + j) -= lie.constant(i, k, m);
        }
      }
  DerivationBasis basis;
  for (const auto& v : nullspace(sys)) {
    RatMatrix d(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) d(a, b) = v[a * n + b];
    basis.generators.push_back(std::move(d));
  }
  return basis;
}

}  // namespace geomlab
