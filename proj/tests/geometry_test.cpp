#include <gtest/gtest.h>

#include "geomlab/geometry.hpp"
#include "support.hpp"

using namespace geomlab;
using geomlab::testing::q;

namespace {

constexpr std::size_t P = 0, X1 = 1, Y1 = 2, Q = 3;

RatVector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }
RatVector s(const Rational& a, std::size_t n, std::size_t i) { return scale(a, unit_vector(n, i)); }

}  // namespace

TEST(LeviCivita, OscillatorTable) {
  const auto m = geomlab::testing::oscillator().space;
  const auto& conn = levi_civita(m);
  EXPECT_TRUE(conn.lambdas[P].is_zero());
  EXPECT_EQ(conn.covariant(e(4, X1), e(4, Y1)), s(q(1, 2), 4, P));
  EXPECT_EQ(conn.covariant(e(4, X1), e(4, Q)), s(q(-1, 2), 4, Y1));
  EXPECT_EQ(conn.covariant(e(4, Y1), e(4, X1)), s(q(-1, 2), 4, P));
  EXPECT_EQ(conn.covariant(e(4, Y1), e(4, Q)), s(q(1, 2), 4, X1));
  EXPECT_EQ(conn.covariant(e(4, Q), e(4, X1)), s(q(1, 2), 4, Y1));
  EXPECT_EQ(conn.covariant(e(4, Q), e(4, Y1)), s(q(-1, 2), 4, X1));
}

TEST(LeviCivita, BiinvariantIsHalfBracket) {
  const auto m = geomlab::testing::oscillator().space;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_EQ(m.connection().covariant(e(4, i), e(4, j)), scale(q(1, 2), m.algebra().basis_bracket(i, j)));
}

TEST(LeviCivita, Heisenberg) {
  const auto m = geomlab::testing::heisenberg().space;
  const auto& c = m.connection();
  EXPECT_EQ(c.covariant(e(3, 0), e(3, 1)), s(q(1, 2), 3, 2));
  EXPECT_EQ(c.covariant(e(3, 1), e(3, 0)), s(q(-1, 2), 3, 2));
  EXPECT_EQ(c.covariant(e(3, 0), e(3, 2)), s(q(-1, 2), 3, 1));
  EXPECT_EQ(c.covariant(e(3, 2), e(3, 0)), s(q(-1, 2), 3, 1));
  EXPECT_EQ(c.covariant(e(3, 1), e(3, 2)), s(q(1, 2), 3, 0));
  EXPECT_EQ(c.covariant(e(3, 2), e(3, 1)), s(q(1, 2), 3, 0));
}

TEST(Curvature, OscillatorComponents) {
  const auto m = geomlab::testing::oscillator().space;
  const auto c = curvature(m);
  // R(X1,Q)X1 = -1/4 P, R(X1,Q)Q = 1/4 X1
  EXPECT_EQ(c.r13(X1, Q, X1, P), q(-1, 4));
  EXPECT_EQ(c.r13(X1, Q, Q, X1), q(1, 4));
  EXPECT_EQ(c.r04(X1, Q, X1, Q), q(-1, 4));
  EXPECT_EQ(c.r04(Y1, Q, Y1, Q), q(-1, 4));
  // everything else is forced by the symmetries
  std::size_t nonzero = 0;
  for (std::size_t k = 0; k < c.r04.size(); ++k) nonzero += !c.r04.flat_at(k).is_zero();
  EXPECT_EQ(nonzero, 8u);
}

TEST(Curvature, BiinvariantFormula) {
  // R(x,y)z = -1/4 [[x,y],z]
  const auto m = geomlab::testing::oscillator().space;
  const auto c = curvature(m);
  const auto& lie = m.algebra();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) {
        const auto expected = scale(q(-1, 4), bracket(lie, lie.basis_bracket(i, j), e(4, k)));
        for (std::size_t l = 0; l < 4; ++l) EXPECT_EQ(c.r13(i, j, k, l), expected[l]);
      }
}

TEST(Curvature, AbelianIsFlat) {
  const auto m = builtin("abelian4-minkowski").space;
  EXPECT_TRUE(curvature(m).r04.is_zero());
  EXPECT_TRUE(weyl(m).is_zero());
}

TEST(Ricci, Oscillator) {
  const auto r = ricci(geomlab::testing::oscillator().space);
  RatMatrix rho(4, 4);
  rho(Q, Q) = q(1, 2);
  EXPECT_EQ(r.rho, rho);
  RatMatrix rc(4, 4);
  rc(P, Q) = q(1, 2);
  EXPECT_EQ(r.ricci_operator, rc);
  EXPECT_EQ(r.scalar, q(0));
}

TEST(Ricci, Heisenberg) {
  const auto r = ricci(geomlab::testing::heisenberg().space);
  const RatMatrix rho{{q(-1, 2), 0, 0}, {0, q(-1, 2), 0}, {0, 0, q(1, 2)}};
  EXPECT_EQ(r.rho, rho);
  EXPECT_EQ(r.scalar, q(-1, 2));
}

TEST(Weyl, ConformallyFlatFixtures) {
  EXPECT_TRUE(weyl(geomlab::testing::oscillator().space).is_zero());
  EXPECT_TRUE(weyl(builtin("su2xR").space).is_zero());
  EXPECT_TRUE(weyl(geomlab::testing::oscillator_frame().space).is_zero());
}

TEST(Weyl, LowDimensionRejected) {
  try {
    weyl(geomlab::testing::heisenberg().space);
    FAIL() << "expected UnsupportedDimension";
  } catch (const ModelError& err) {
    EXPECT_EQ(err.kind(), ModelErrorKind::UnsupportedDimension);
  }
}

TEST(Weyl, NonflatExampleIsNonzero) {
  // Heisenberg times a line is not conformally flat
  LieAlgebraModel::BracketTable t;
  t[{0, 1}] = RatVector{q(0), q(0), q(1), q(0)};
  const MetricLieAlgebra m(LieAlgebraModel({"e1", "e2", "e3", "e4"}, t), RatMatrix::identity(4));
  EXPECT_FALSE(weyl(m).is_zero());
}

TEST(CovariantDerivative, MetricIsParallel) {
  for (const auto& m : geomlab::testing::all_fixtures())
    EXPECT_TRUE(covariant_derivative_tensor(m, tensor_from_matrix(m.metric())).is_zero());
}

TEST(CovariantDerivative, OscillatorRicciParallel) {
  const auto m = geomlab::testing::oscillator().space;
  EXPECT_TRUE(covariant_derivative_tensor(m, tensor_from_matrix(ricci(m).rho)).is_zero());
}

TEST(CovariantDerivative, HeisenbergRicci) {
  const auto m = geomlab::testing::heisenberg().space;
  const auto rho = ricci(m).rho;
  const auto nabla = covariant_derivative_tensor(m, tensor_from_matrix(rho));
  // -rho(nabla_e1 e2, e3) - rho(e2, nabla_e1 e3), from the connection directly
  const auto& c = m.connection();
  const Rational expected = -dot(c.covariant(e(3, 0), e(3, 1)), rho * e(3, 2)) -
                            dot(e(3, 1), rho * c.covariant(e(3, 0), e(3, 2)));
  EXPECT_EQ(expected, q(-1, 2));
  EXPECT_EQ(nabla(0, 1, 2), expected);
}

TEST(Ledger, Fixtures) {
  const auto osc = ledger_conditions(geomlab::testing::oscillator().space);
  EXPECT_TRUE(osc.l3);
  EXPECT_TRUE(osc.l5);
  EXPECT_TRUE(osc.locally_symmetric);
  const auto ab = ledger_conditions(builtin("abelian4-minkowski").space);
  EXPECT_TRUE(ab.l3 && ab.l5 && ab.locally_symmetric);
  const auto h = ledger_conditions(geomlab::testing::heisenberg().space);
  EXPECT_TRUE(h.l3);
  EXPECT_FALSE(h.locally_symmetric);
  EXPECT_TRUE(h.nabla_r_witness.has_value());
}

TEST(Ledger, NonCyclicParallelExample) {
  // the non-unimodular solvable algebra [e1,e2] = e2 with a flat-free metric is not L3
  LieAlgebraModel::BracketTable t;
  t[{0, 1}] = RatVector{q(0), q(1), q(0)};
  t[{0, 2}] = RatVector{q(0), q(0), q(2)};
  const MetricLieAlgebra m(LieAlgebraModel({"e1", "e2", "e3"}, t), RatMatrix::identity(3));
  const auto r = ledger_conditions(m);
  EXPECT_FALSE(r.l3);
  ASSERT_TRUE(r.l3_witness.has_value());
}

TEST(BiInvariance, Fixtures) {
  EXPECT_TRUE(biinvariance_check(geomlab::testing::oscillator().space));
  EXPECT_FALSE(biinvariance_check(geomlab::testing::heisenberg().space));
  EXPECT_TRUE(biinvariance_check(builtin("abelian4-minkowski").space));
  EXPECT_TRUE(biinvariance_check(builtin("su2xR").space));
}

TEST(ChangeOfBasis, OscillatorFrame) {
  const auto osc = geomlab::testing::oscillator();
  const auto f = change_of_basis(osc.space, *osc.frame);
  const RatMatrix minkowski{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
  EXPECT_EQ(f.metric(), minkowski);
  const auto& lie = f.algebra();
  const std::size_t e1 = 0, e2 = 1, e3 = 2, e4 = 3;
  EXPECT_EQ(lie.basis_bracket(e1, e2), s(q(-1), 4, e3));
  EXPECT_EQ(lie.basis_bracket(e1, e3), subtract(e(4, e2), e(4, e4)));
  EXPECT_EQ(lie.basis_bracket(e2, e3), s(q(-1), 4, e1));
  EXPECT_EQ(lie.basis_bracket(e3, e4), e(4, e1));
  EXPECT_EQ(lie.basis_bracket(e1, e4), s(q(-1), 4, e3));
  EXPECT_TRUE(is_zero(lie.basis_bracket(e2, e4)));
  EXPECT_EQ(f, builtin("oscillator-frame").space);
}

TEST(ChangeOfBasis, IdentityKeepsModel) {
  const auto m = geomlab::testing::oscillator().space;
  EXPECT_EQ(change_of_basis(m, RatMatrix::identity(4), m.labels()), m);
  EXPECT_THROW(change_of_basis(m, RatMatrix(4, 4)), SingularMatrix);
}

TEST(MetricLieAlgebra, ValidationOrder) {
  LieAlgebraModel::BracketTable t;
  t[{0, 1}] = RatVector{q(0), q(0), q(1)};
  const LieAlgebraModel lie({"a", "b", "c"}, t);
  try {
    MetricLieAlgebra(lie, RatMatrix{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    FAIL();
  } catch (const ModelError& err) {
    EXPECT_EQ(err.kind(), ModelErrorKind::AsymmetricMetric);
  }
  try {
    MetricLieAlgebra(lie, RatMatrix{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}});
    FAIL();
  } catch (const ModelError& err) {
    EXPECT_EQ(err.kind(), ModelErrorKind::SingularMetric);
  }
  EXPECT_THROW(MetricLieAlgebra(lie, RatMatrix::identity(2)), DimensionMismatch);
}
