#include "geomlab/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace geomlab::kernels {

namespace {

// R(u_i,u_j) written into out(i, j, ., .).
void curvature_pair(const LieAlgebraModel& lie, std::span<const RatMatrix> lambdas, std::size_t i,
                    std::size_t j, Tensor& out) {
  const std::size_t n = lie.dimension();
  RatMatrix r = lambdas[i] * lambdas[j] - lambdas[j] * lambdas[i];
  for (std::size_t m = 0; m < n; ++m) {
    const Rational& c = lie.constant(i, j, m);
    if (!c.is_zero()) r -= lambdas[m] * c;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) out(i, j, k, l) = r(l, k);
}

Rational covariant_component(std::span<const RatMatrix> lambdas, const Tensor& t, std::vector<std::size_t> idx) {
  // idx = (i, j1..jk)
  const std::size_t n = t.dim();
  const std::size_t i = idx[0];
  std::vector<std::size_t> slots(idx.begin() + 1, idx.end());
  Rational s;
  for (std::size_t slot = 0; slot < slots.size(); ++slot) {
    const std::size_t j = slots[slot];
    for (std::size_t m = 0; m < n; ++m) {
      const Rational& gamma = lambdas[i](m, j);
      if (gamma.is_zero()) continue;
      slots[slot] = m;
      const Rational& v = t.at(slots);
      if (!v.is_zero()) s -= gamma * v;
    }
    slots[slot] = j;
  }
  return s;
}

// All sorted multi-indices of length `degree` over 0..n-1.
std::vector<std::vector<std::size_t>> multisets(std::size_t n, std::size_t degree) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return out;
  std::vector<std::size_t> cur(degree, 0);
  while (true) {
    out.push_back(cur);
    std::size_t p = degree;
    while (p > 0 && cur[p - 1] == n - 1) --p;
    if (p == 0) break;
    const std::size_t v = cur[p - 1] + 1;
    for (std::size_t q = p - 1; q < degree; ++q) cur[q] = v;
  }
  return out;
}

// raised(x1, x2, c, d) = sum_ab g^ac g^bd R(x1, a, x2, b)
Rational raised_component(const RatMatrix& ginv, const Tensor& r04, std::size_t x1, std::size_t x2, std::size_t c,
                          std::size_t d) {
  const std::size_t n = r04.dim();
  Rational s;
  for (std::size_t a = 0; a < n; ++a) {
    if (ginv(a, c).is_zero()) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (ginv(b, d).is_zero()) continue;
      const Rational& r = r04(x1, a, x2, b);
      if (!r.is_zero()) s += ginv(a, c) * ginv(b, d) * r;
    }
  }
  return s;
}

Rational l5_term(const Tensor& raised, const Tensor& nabla_r04, std::span<const std::size_t> x) {
  const std::size_t n = raised.dim();
  Rational s;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t d = 0; d < n; ++d) {
      const Rational& a = raised(x[0], x[1], c, d);
      if (a.is_zero()) continue;
      const Rational& b = nabla_r04(x[2], x[3], c, x[4], d);
      if (!b.is_zero()) s += a * b;
    }
  return s;
}

void check_l5_inputs(const RatMatrix& ginv, const Tensor& r04, const Tensor& nabla_r04) {
  if (r04.rank() != 4 || nabla_r04.rank() != 5 || r04.dim() != nabla_r04.dim() || ginv.rows() != r04.dim() ||
      ginv.cols() != r04.dim()) {
    throw DimensionMismatch("ledger_l5_form: incompatible inputs");
  }
}

}  // namespace

namespace serial {

Tensor curvature_endomorphisms(const LieAlgebraModel& lie, std::span<const RatMatrix> lambdas) {
  const std::size_t n = lie.dimension();
  Tensor out(n, 4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) curvature_pair(lie, lambdas, i, j, out);
  return out;
}

Tensor covariant_derivative(std::span<const RatMatrix> lambdas, const Tensor& t) {
  if (t.rank() == 0) throw std::invalid_argument("covariant derivative of a rank-0 tensor");
  Tensor out(t.dim(), t.rank() + 1);
  for (std::size_t k = 0; k < out.size(); ++k) out.flat_at(k) = covariant_component(lambdas, t, out.unflat(k));
  return out;
}

MonomialCoefficients polarize(const Tensor& t) {
  MonomialCoefficients coeffs;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const Rational& v = t.flat_at(k);
    if (v.is_zero()) continue;
    auto idx = t.unflat(k);
    std::sort(idx.begin(), idx.end());
    coeffs[idx] += v;
  }
  std::erase_if(coeffs, [](const auto& kv) { return kv.second.is_zero(); });
  return coeffs;
}

MonomialCoefficients ledger_l5_form(const RatMatrix& inverse_metric, const Tensor& r04, const Tensor& nabla_r04) {
  check_l5_inputs(inverse_metric, r04, nabla_r04);
  const std::size_t n = r04.dim();
  Tensor raised(n, 4);
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) raised(x1, x2, c, d) = raised_component(inverse_metric, r04, x1, x2, c, d);
  Tensor form(n, 5);
  for (std::size_t k = 0; k < form.size(); ++k) form.flat_at(k) = l5_term(raised, nabla_r04, form.unflat(k));
  return polarize(form);
}

}  // namespace serial

namespace parallel {

Tensor curvature_endomorphisms(const LieAlgebraModel& lie, std::span<const RatMatrix> lambdas) {
  const std::size_t n = lie.dimension();
  Tensor out(n, 4);
  const std::ptrdiff_t pairs = static_cast<std::ptrdiff_t>(n * n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t p = 0; p < pairs; ++p) {
    const auto i = static_cast<std::size_t>(p) / n;
    const auto j = static_cast<std::size_t>(p) % n;
    curvature_pair(lie, lambdas, i, j, out);
  }
  return out;
}

Tensor covariant_derivative(std::span<const RatMatrix> lambdas, const Tensor& t) {
  if (t.rank() == 0) throw std::invalid_argument("covariant derivative of a rank-0 tensor");
  Tensor out(t.dim(), t.rank() + 1);
  const auto total = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < total; ++k) {
    const auto fk = static_cast<std::size_t>(k);
    out.flat_at(fk) = covariant_component(lambdas, t, out.unflat(fk));
  }
  return out;
}

namespace {

template <typename Term>
MonomialCoefficients sum_over_permutations(std::size_t n, std::size_t degree, Term term) {
  const auto monomials = multisets(n, degree);
  std::vector<Rational> values(monomials.size());
  const auto count = static_cast<std::ptrdiff_t>(monomials.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t m = 0; m < count; ++m) {
    auto perm = monomials[static_cast<std::size_t>(m)];
    Rational s;
    do {
      s += term(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    values[static_cast<std::size_t>(m)] = std::move(s);
  }
  MonomialCoefficients coeffs;
  for (std::size_t m = 0; m < monomials.size(); ++m)
    if (!values[m].is_zero()) coeffs.emplace(monomials[m], values[m]);
  return coeffs;
}

}  // namespace

MonomialCoefficients polarize(const Tensor& t) {
  if (t.rank() == 0) {
    MonomialCoefficients c;
    if (!t.flat_at(0).is_zero()) c.emplace(std::vector<std::size_t>{}, t.flat_at(0));
    return c;
  }
  return sum_over_permutations(t.dim(), t.rank(),
                               [&](const std::vector<std::size_t>& idx) { return t.at(idx); });
}

MonomialCoefficients ledger_l5_form(const RatMatrix& inverse_metric, const Tensor& r04, const Tensor& nabla_r04) {
  check_l5_inputs(inverse_metric, r04, nabla_r04);
  const std::size_t n = r04.dim();
  Tensor raised(n, 4);
  const auto total = static_cast<std::ptrdiff_t>(raised.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < total; ++k) {
    const auto fk = static_cast<std::size_t>(k);
    const auto idx = raised.unflat(fk);
    raised.flat_at(fk) = raised_component(inverse_metric, r04, idx[0], idx[1], idx[2], idx[3]);
  }
  return sum_over_permutations(n, 5, [&](const std::vector<std::size_t>& x) {
    return l5_term(raised, nabla_r04, x);
  });
}

}  // namespace parallel

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace geomlab::kernels
