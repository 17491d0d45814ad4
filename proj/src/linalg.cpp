#include "geomlab/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace geomlab {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_columns(std::span<const RatVector> columns, std::size_t rows) {
  RatMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RatMatrix RatMatrix::from_rows(std::span<const RatVector> rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rational RatMatrix::trace() const {
  if (!square()) throw DimensionMismatch("trace of non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

bool RatMatrix::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  RatMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) m(i, j) += aik * b(k, j);
      }
    }
  return m;
}

RatVector operator*(const RatMatrix& a, std::span<const Rational> x) {
  if (a.cols_ != x.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  RatVector y(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (!a(i, j).is_zero() && !x[j].is_zero()) y[i] += a(i, j) * x[j];
  return y;
}

RatVector zero_vector(std::size_t n) { return RatVector(n); }

RatVector unit_vector(std::size_t n, std::size_t i) {
  RatVector v(n);
  v.at(i) = 1;
  return v;
}

RatVector add(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum length mismatch");
  RatVector v(a.begin(), a.end());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b[i];
  return v;
}

RatVector subtract(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference length mismatch");
  RatVector v(a.begin(), a.end());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b[i];
  return v;
}

RatVector scale(const Rational& s, std::span<const Rational> a) {
  RatVector v(a.begin(), a.end());
  for (auto& x : v) x *= s;
  return v;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(std::span<const Rational> a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x.is_zero(); });
}

std::string to_string(std::span<const Rational> a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? ", " : "") << a[i];
  os << ')';
  return os.str();
}

std::vector<std::size_t> row_reduce(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead_row, j));
    const Rational inv = Rational(1) / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      const Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(lead_row, j).is_zero()) m(r, j) -= f * m(lead_row, j);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

std::size_t rank(const RatMatrix& a) {
  RatMatrix m = a;
  return row_reduce(m).size();
}

namespace {

// Kernel basis read off a reduced row echelon form with `n` unknowns.
std::vector<RatVector> kernel_from_rref(const RatMatrix& r, const std::vector<std::size_t>& pivots,
                                        std::size_t n) {
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

AffineSolution solve_affine(const RatMatrix& a, std::span<const Rational> b) {
  if (a.rows() != b.size()) throw DimensionMismatch("solve_affine: right-hand side length does not match rows");
  const std::size_t n = a.cols();
  RatMatrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  auto pivots = row_reduce(aug);
  AffineSolution sol;
  sol.augmented_rank = pivots.size();
  const bool inconsistent = !pivots.empty() && pivots.back() == n;
  if (inconsistent) pivots.pop_back();
  sol.rank = pivots.size();
  sol.feasible = !inconsistent;
  sol.kernel_basis = kernel_from_rref(aug, pivots, n);
  if (sol.feasible) {
    sol.particular.assign(n, Rational());
    for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = aug(i, n);
  }
  return sol;
}

std::vector<RatVector> nullspace(const RatMatrix& a) {
  RatMatrix r = a;
  const auto pivots = row_reduce(r);
  return kernel_from_rref(r, pivots, a.cols());
}

RatMatrix matrix_inverse(const RatMatrix& a) {
  if (!a.square()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw SingularMatrix();
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

Rational determinant(const RatMatrix& a) {
  if (!a.square()) throw DimensionMismatch("determinant of non-square matrix");
  RatMatrix m = a;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Rational();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

std::vector<RatVector> independent_subset(std::span<const RatVector> vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  RatMatrix m = RatMatrix::from_columns(vectors, dim);
  const auto pivots = row_reduce(m);
  std::vector<RatVector> out;
  for (auto p : pivots) out.push_back(vectors[p]);
  return out;
}

std::vector<RatVector> intersect_subspaces(std::span<const RatVector> a, std::span<const RatVector> b,
                                           std::size_t dim) {
  if (a.empty() || b.empty()) return {};
  // x = A s = B t  <=>  [A | -B] (s, t) = 0
  RatMatrix m(dim, a.size() + b.size());
  for (std::size_t c = 0; c < a.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r) m(r, c) = a[c][r];
  for (std::size_t c = 0; c < b.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r) m(r, a.size() + c) = -b[c][r];
  std::vector<RatVector> out;
  for (const auto& k : nullspace(m)) {
    RatVector x(dim);
    for (std::size_t c = 0; c < a.size(); ++c)
      if (!k[c].is_zero())
        for (std::size_t r = 0; r < dim; ++r) x[r] += k[c] * a[c][r];
    out.push_back(std::move(x));
  }
  return independent_subset(out, dim);
}

bool in_span(std::span<const RatVector> basis, std::span<const Rational> v, std::size_t dim) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  std::vector<RatVector> all(basis.begin(), basis.end());
  const std::size_t r0 = independent_subset(all, dim).size();
  all.emplace_back(v.begin(), v.end());
  return independent_subset(all, dim).size() == r0;
}

bool same_span(std::span<const RatVector> a, std::span<const RatVector> b, std::size_t dim) {
  std::vector<RatVector> all(a.begin(), a.end());
  const std::size_t ra = independent_subset(a, dim).size();
  const std::size_t rb = independent_subset(b, dim).size();
  all.insert(all.end(), b.begin(), b.end());
  const std::size_t rab = independent_subset(all, dim).size();
  return ra == rb && ra == rab;
}

RatVector characteristic_polynomial(const RatMatrix& a) {
  if (!a.square()) throw DimensionMismatch("characteristic polynomial of non-square matrix");
  // Faddeev-LeVerrier recursion.
  const std::size_t n = a.rows();
  RatVector c(n + 1);
  c[n] = 1;
  RatMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    c[n - k] = -(a * m).trace() / Rational(static_cast<long>(k));
  }
  return c;
}

namespace {

std::vector<mpz_class> divisors(mpz_class value) {
  value = abs(value);
  std::vector<mpz_class> primes;
  std::vector<unsigned> exps;
  for (mpz_class p = 2; p * p <= value; ++p) {
    if (value % p != 0) continue;
    unsigned e = 0;
    while (value % p == 0) {
      value /= p;
      ++e;
    }
    primes.push_back(p);
    exps.push_back(e);
  }
  if (value > 1) {
    primes.push_back(value);
    exps.push_back(1);
  }
  std::vector<mpz_class> divs{1};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::size_t count = divs.size();
    mpz_class pk = 1;
    for (unsigned e = 1; e <= exps[i]; ++e) {
      pk *= primes[i];
      for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pk);
    }
  }
  return divs;
}

Rational evaluate(std::span<const Rational> poly, const Rational& x) {
  Rational acc;
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
  return acc;
}

// Divides by (x - r); caller guarantees r is a root.
RatVector deflate(std::span<const Rational> poly, const Rational& r) {
  const std::size_t d = poly.size() - 1;
  RatVector q(d);
  Rational carry;
  for (std::size_t i = d; i-- > 0;) {
    carry = poly[i + 1] + carry * r;
    q[i] = carry;
  }
  return q;
}

void trim(RatVector& poly) {
  while (poly.size() > 1 && poly.back().is_zero()) poly.pop_back();
}

}  // namespace

RootSplit rational_roots(std::span<const Rational> poly_in) {
  RootSplit out;
  RatVector poly(poly_in.begin(), poly_in.end());
  trim(poly);
  if (poly.empty() || (poly.size() == 1)) {
    out.remainder = poly;
    return out;
  }
  while (poly.size() > 1 && poly.front().is_zero()) {
    out.roots.emplace_back(0);
    poly.erase(poly.begin());
  }
  if (poly.size() > 1) {
    mpz_class lcm_den = 1;
    for (const auto& c : poly) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
    const mpz_class constant = (poly.front() * Rational(mpq_class(lcm_den))).numerator();
    const mpz_class leading = (poly.back() * Rational(mpq_class(lcm_den))).numerator();
    const auto ps = divisors(constant);
    const auto qs = divisors(leading);
    std::vector<Rational> candidates;
    for (const auto& p : ps)
      for (const auto& q : qs) {
        candidates.emplace_back(mpq_class(p, q));
        candidates.emplace_back(mpq_class(-p, q));
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      while (poly.size() > 1 && evaluate(poly, r).is_zero()) {
        out.roots.push_back(r);
        poly = deflate(poly, r);
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.remainder = poly;
  return out;
}

RationalSpectrum rational_eigen(const RatMatrix& a) {
  if (!a.square()) throw DimensionMismatch("eigenvalues of non-square matrix");
  const auto split = rational_roots(characteristic_polynomial(a));
  RationalSpectrum spec;
  spec.has_irrational_factors = split.remainder.size() > 1;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < split.roots.size(); ++i) {
    if (i > 0 && split.roots[i] == split.roots[i - 1]) continue;
    RatMatrix shifted = a;
    for (std::size_t k = 0; k < n; ++k) shifted(k, k) -= split.roots[i];
    spec.eigenspaces.push_back({split.roots[i], nullspace(shifted)});
  }
  return spec;
}

}  // namespace geomlab
