#pragma once

// Tensor assembly loops. Each kernel exists twice: a straightforward serial
// reference and an OpenMP version that splits the outer loop over output
// components. The geometry layer calls the parallel ones; tests check the two
// agree exactly and the benchmark target compares their timings.

#include <map>
#include <vector>

#include "geomlab/lie_algebra.hpp"
#include "geomlab/tensor.hpp"

namespace geomlab::kernels {

/// Coefficients of a homogeneous polynomial, keyed by the sorted multi-index of
/// its monomial (x_0^2 x_3 is {0, 0, 3}). Zero coefficients are omitted.
using MonomialCoefficients = std::map<std::vector<std::size_t>, Rational>;

namespace serial {

/// R^l_ijk stored at (i, j, k, l), from R(u_i,u_j) = [L_i, L_j] - L_[u_i,u_j].
Tensor curvature_endomorphisms(const LieAlgebraModel& lie, std::span<const RatMatrix> lambdas);

/// (nabla T)_{i j1..jk} = -sum_s T(.., nabla_{u_i} u_{js}, ..) for a constant covariant T.
Tensor covariant_derivative(std::span<const RatMatrix> lambdas, const Tensor& t);

/// Monomial coefficients of X -> T(X, ..., X) for a covariant tensor T.
MonomialCoefficients polarize(const Tensor& t);

/// Coefficients of the degree-5 form
/// X -> sum g^ac g^bd R(X,u_a,X,u_b) (nabla_X R)(X,u_c,X,u_d).
MonomialCoefficients ledger_l5_form(const RatMatrix& inverse_metric, const Tensor& r04, const Tensor& nabla_r04);

}  // namespace serial

namespace parallel {

Tensor curvature_endomorphisms(const LieAlgebraModel& lie, std::span<const RatMatrix> lambdas);
Tensor covariant_derivative(std::span<const RatMatrix> lambdas, const Tensor& t);
MonomialCoefficients polarize(const Tensor& t);
MonomialCoefficients ledger_l5_form(const RatMatrix& inverse_metric, const Tensor& r04, const Tensor& nabla_r04);

}  // namespace parallel

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int thread_count();

}  // namespace geomlab::kernels
