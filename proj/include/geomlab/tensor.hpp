#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "geomlab/linalg.hpp"

namespace geomlab {

/// Dense array of rationals with `rank` indices, each ranging over 0..dim-1.
/// Index order is the order in which components are written, e.g. R_ijkl is
/// stored at (i, j, k, l). Whether a slot is up or down is the caller's business.
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::size_t dim, std::size_t rank);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rank_; }
  std::size_t size() const { return data_.size(); }

  template <typename... I>
  Rational& operator()(I... idx) {
    return data_[flat({static_cast<std::size_t>(idx)...})];
  }
  template <typename... I>
  const Rational& operator()(I... idx) const {
    return data_[flat({static_cast<std::size_t>(idx)...})];
  }

  Rational& at(std::span<const std::size_t> idx) { return data_[flat(idx)]; }
  const Rational& at(std::span<const std::size_t> idx) const { return data_[flat(idx)]; }
  Rational& flat_at(std::size_t k) { return data_[k]; }
  const Rational& flat_at(std::size_t k) const { return data_[k]; }

  std::size_t flat(std::span<const std::size_t> idx) const;
  /// Inverse of flat().
  std::vector<std::size_t> unflat(std::size_t k) const;

  bool is_zero() const;
  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  std::size_t flat(std::initializer_list<std::size_t> idx) const {
    return flat(std::span<const std::size_t>(idx.begin(), idx.size()));
  }

  std::size_t dim_ = 0;
  std::size_t rank_ = 0;
  std::vector<Rational> data_;
};

Tensor tensor_from_matrix(const RatMatrix& m);
RatMatrix matrix_from_tensor(const Tensor& t);

/// Pulls back a fully covariant tensor along the change of basis B (columns are the
/// new basis vectors in old coordinates): T'(a,b,...) = T(B e_a, B e_b, ...).
Tensor pull_back(const Tensor& t, const RatMatrix& b);

}  // namespace geomlab
