#include "geomlab/tensor.hpp"

#include <algorithm>

namespace geomlab {

Tensor::Tensor(std::size_t dim, std::size_t rank) : dim_(dim), rank_(rank) {
  std::size_t n = 1;
  for (std::size_t r = 0; r < rank; ++r) n *= dim;
  data_.assign(n, Rational());
}

std::size_t Tensor::flat(std::span<const std::size_t> idx) const {
  if (idx.size() != rank_) throw DimensionMismatch("tensor index has wrong rank");
  std::size_t k = 0;
  for (auto i : idx) {
    if (i >= dim_) throw std::out_of_range("tensor index out of range");
    k = k * dim_ + i;
  }
  return k;
}

std::vector<std::size_t> Tensor::unflat(std::size_t k) const {
  std::vector<std::size_t> idx(rank_);
  for (std::size_t r = rank_; r-- > 0;) {
    idx[r] = k % dim_;
    k /= dim_;
  }
  return idx;
}

bool Tensor::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

Tensor tensor_from_matrix(const RatMatrix& m) {
  if (!m.square()) throw DimensionMismatch("tensor_from_matrix needs a square matrix");
  Tensor t(m.rows(), 2);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(i, j) = m(i, j);
  return t;
}

RatMatrix matrix_from_tensor(const Tensor& t) {
  if (t.rank() != 2) throw DimensionMismatch("matrix_from_tensor needs rank 2");
  RatMatrix m(t.dim(), t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j) m(i, j) = t(i, j);
  return m;
}

Tensor pull_back(const Tensor& t, const RatMatrix& b) {
  const std::size_t n = t.dim();
  if (b.rows() != n || b.cols() != n) throw DimensionMismatch("pull_back: basis change has wrong shape");
  // Contract one slot at a time: n^(rank+1) work per slot.
  Tensor cur = t;
  for (std::size_t slot = 0; slot < t.rank(); ++slot) {
    Tensor next(n, t.rank());
    for (std::size_t k = 0; k < next.size(); ++k) {
      auto idx = next.unflat(k);
      const std::size_t a = idx[slot];
      Rational s;
      for (std::size_t i = 0; i < n; ++i) {
        if (b(i, a).is_zero()) continue;
        idx[slot] = i;
        const Rational& v = cur.at(idx);
        if (!v.is_zero()) s += b(i, a) * v;
      }
      next.flat_at(k) = std::move(s);
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace geomlab
