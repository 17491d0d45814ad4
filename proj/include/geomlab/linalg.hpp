#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "geomlab/rational.hpp"

namespace geomlab {

using RatVector = std::vector<Rational>;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::domain_error {
 public:
  SingularMatrix() : std::domain_error("matrix is singular") {}
};

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of equal length).
  static RatMatrix from_columns(std::span<const RatVector> columns, std::size_t rows);
  static RatMatrix from_rows(std::span<const RatVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> entries() const { return data_; }
  RatVector column(std::size_t c) const;
  RatVector row(std::size_t r) const;

  RatMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_symmetric() const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rational& s);

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
  friend RatMatrix operator*(const Rational& s, RatMatrix a) { return a *= s; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatVector operator*(const RatMatrix& a, std::span<const Rational> x);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  RatVector data_;
};

// Vector helpers.
RatVector zero_vector(std::size_t n);
RatVector unit_vector(std::size_t n, std::size_t i);
RatVector add(std::span<const Rational> a, std::span<const Rational> b);
RatVector subtract(std::span<const Rational> a, std::span<const Rational> b);
RatVector scale(const Rational& s, std::span<const Rational> a);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
bool is_zero(std::span<const Rational> a);
std::string to_string(std::span<const Rational> a);

/// Exact solution set of A x = b.
struct AffineSolution {
  bool feasible = false;
  RatVector particular;              // present iff feasible
  std::vector<RatVector> kernel_basis;
  std::size_t rank = 0;              // rank(A)
  std::size_t augmented_rank = 0;    // rank(A|b); exceeds rank iff infeasible
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& m);
std::size_t rank(const RatMatrix& a);

AffineSolution solve_affine(const RatMatrix& a, std::span<const Rational> b);
std::vector<RatVector> nullspace(const RatMatrix& a);
RatMatrix matrix_inverse(const RatMatrix& a);
Rational determinant(const RatMatrix& a);

/// Column-space basis of the span of `vectors` (a maximal independent subset, in order).
std::vector<RatVector> independent_subset(std::span<const RatVector> vectors, std::size_t dim);
/// Basis of the intersection of two subspaces of Q^dim given by spanning sets.
std::vector<RatVector> intersect_subspaces(std::span<const RatVector> a, std::span<const RatVector> b,
                                           std::size_t dim);
/// True iff span(a) == span(b).
bool same_span(std::span<const RatVector> a, std::span<const RatVector> b, std::size_t dim);
/// True iff v lies in span(basis).
bool in_span(std::span<const RatVector> basis, std::span<const Rational> v, std::size_t dim);

/// Coefficients c_0..c_n of det(x I - A), lowest degree first (monic, c_n = 1).
RatVector characteristic_polynomial(const RatMatrix& a);

struct Eigenspace {
  Rational eigenvalue;
  std::vector<RatVector> basis;
};

struct RationalSpectrum {
  std::vector<Eigenspace> eigenspaces;  // sorted by eigenvalue
  bool has_irrational_factors = false;
};

/// Rational eigenvalues of a square matrix with exact eigenspaces. The flag is set
/// when the characteristic polynomial keeps a factor of degree >= 2 after every
/// rational root has been divided out.
RationalSpectrum rational_eigen(const RatMatrix& a);

/// Rational roots (with multiplicity) of a polynomial given lowest degree first,
/// plus the cofactor left after removing them.
struct RootSplit {
  std::vector<Rational> roots;
  RatVector remainder;
};
RootSplit rational_roots(std::span<const Rational> poly);

}  // namespace geomlab
