#include <gtest/gtest.h>

#include "geomlab/solitons.hpp"
#include "geomlab/vector_fields.hpp"
#include "support.hpp"

using namespace geomlab;
using geomlab::testing::q;
using geomlab::testing::RandomRationals;

namespace {

class FixtureProperties : public ::testing::TestWithParam<std::string> {
 protected:
  MetricLieAlgebra model() const { return builtin(GetParam()).space; }
};

RatVector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

}  // namespace

TEST_P(FixtureProperties, TorsionFreeAndMetricCompatible) {
  const auto m = model();
  const std::size_t n = m.dimension();
  const auto& c = m.connection();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_EQ(subtract(c.covariant(e(n, i), e(n, j)), c.covariant(e(n, j), e(n, i))), m.algebra().basis_bracket(i, j));
      for (std::size_t k = 0; k < n; ++k)
        EXPECT_TRUE((m.inner(c.covariant(e(n, i), e(n, j)), e(n, k)) + m.inner(e(n, j), c.covariant(e(n, i), e(n, k))))
                        .is_zero());
    }
}

TEST_P(FixtureProperties, CurvatureSymmetries) {
  const auto m = model();
  const std::size_t n = m.dimension();
  const auto r = curvature(m).r04;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          EXPECT_EQ(r(i, j, k, l), -r(j, i, k, l));
          EXPECT_EQ(r(i, j, k, l), -r(i, j, l, k));
          EXPECT_EQ(r(i, j, k, l), r(k, l, i, j));
          EXPECT_TRUE((r(i, j, k, l) + r(j, k, i, l) + r(k, i, j, l)).is_zero());
        }
}

TEST_P(FixtureProperties, SecondBianchi) {
  const auto m = model();
  const std::size_t n = m.dimension();
  const auto nr = covariant_derivative_tensor(m, curvature(m).r04);  // (a; i, j, k, l)
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l)
            EXPECT_TRUE((nr(a, i, j, k, l) + nr(i, j, a, k, l) + nr(j, a, i, k, l)).is_zero());
}

TEST_P(FixtureProperties, RicciIdentities) {
  const auto m = model();
  const auto ric = ricci(m);
  EXPECT_TRUE(ric.rho.is_symmetric());
  EXPECT_EQ(ric.scalar, ric.ricci_operator.trace());
  // rho as a metric trace of R: rho_jk = g^il R_ijkl
  const auto r04 = curvature(m).r04;
  EXPECT_EQ(tensor_from_matrix(ric.rho), metric_trace(r04, m.inverse_metric(), 0, 3));
  if (biinvariance_check(m)) EXPECT_EQ(ric.rho, q(-1, 4) * killing_form(m.algebra()));
}

TEST_P(FixtureProperties, BiinvariantConsequences) {
  const auto m = model();
  if (!biinvariance_check(m)) GTEST_SKIP() << "not bi-invariant";
  const std::size_t n = m.dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      EXPECT_EQ(m.connection().covariant(e(n, i), e(n, j)), scale(q(1, 2), m.algebra().basis_bracket(i, j)));
  EXPECT_TRUE(ledger_conditions(m).locally_symmetric);
  for (std::size_t i = 0; i < n; ++i) {
    const auto rep = analyze_field(m, {e(n, i)});
    EXPECT_TRUE(rep.is_geodesic);
    EXPECT_TRUE(rep.is_killing);
  }
}

TEST_P(FixtureProperties, WeylTraceFree) {
  const auto m = model();
  if (m.dimension() < 4) GTEST_SKIP() << "Weyl tensor needs dimension 4";
  const auto c = weyl(m);
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t s = p + 1; s < 4; ++s) EXPECT_TRUE(metric_trace(c, m.inverse_metric(), p, s).is_zero());
}

TEST_P(FixtureProperties, Naturality) {
  const auto m = model();
  const std::size_t n = m.dimension();
  RandomRationals rng(static_cast<unsigned>(std::hash<std::string>{}(GetParam()) % 1000));
  for (int trial = 0; trial < 3; ++trial) {
    const RatMatrix b = rng.invertible(n);
    const auto mb = change_of_basis(m, b);
    // connection: B nabla'_a e'_b = nabla_{B e_a} (B e_b)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        EXPECT_EQ(b * mb.connection().covariant(e(n, i), e(n, j)), m.connection().covariant(b.column(i), b.column(j)));
    EXPECT_EQ(curvature(mb).r04, pull_back(curvature(m).r04, b));
    EXPECT_EQ(ricci(mb).rho, b.transpose() * ricci(m).rho * b);
    EXPECT_EQ(ricci(mb).scalar, ricci(m).scalar);
    std::vector<RatVector> mapped;
    for (const auto& v : harmonic_section_space(mb)) mapped.push_back(b * v);
    EXPECT_TRUE(same_span(mapped, harmonic_section_space(m), n));
    if (n >= 4) EXPECT_EQ(weyl(mb), pull_back(weyl(m), b));
    const auto lm = ledger_conditions(m), lb = ledger_conditions(mb);
    EXPECT_EQ(lm.l3, lb.l3);
    EXPECT_EQ(lm.l5, lb.l5);
    EXPECT_EQ(lm.locally_symmetric, lb.locally_symmetric);
  }
}

TEST_P(FixtureProperties, SolverPlugBack) {
  const auto m = model();
  for (const auto& v : {einstein_solve(m), invariant_ricci_soliton_solve(m), algebraic_ricci_soliton_solve(m)}) {
    if (v.feasible) EXPECT_TRUE(v.plug_back_verified);
    else EXPECT_LT(v.solution.rank, v.solution.augmented_rank);
  }
}

TEST_P(FixtureProperties, WalkerGeneratorsAreParallelAndNull) {
  const auto m = model();
  const auto w = parallel_null_line_fields(m);
  for (const auto& l : w.lines) {
    EXPECT_TRUE(m.inner(l, l).is_zero());
    const std::vector<RatVector> line{l};
    for (const auto& lambda : m.connection().lambdas) EXPECT_TRUE(in_span(line, lambda * l, m.dimension()));
  }
}

TEST_P(FixtureProperties, EnergyMonotoneAndParallelMinimal) {
  const auto m = model();
  const std::size_t n = m.dimension();
  const Rational half_n = Rational(static_cast<long>(n)) / q(2);
  for (const auto& v : parallel_fields(m)) EXPECT_EQ(energy_report(m, {v}, q(2, 3)).total, half_n * q(2, 3));
  RandomRationals rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    const auto v = rng.vector(n);
    const auto rep = energy_report(m, {v}, q(1));
    EXPECT_EQ(rep.total, half_n + rep.density / q(2));
  }
}

INSTANTIATE_TEST_SUITE_P(AllFixtures, FixtureProperties, ::testing::ValuesIn(builtin_names()),
                         [](const auto& info) {
                           std::string s = info.param;
                           std::replace(s.begin(), s.end(), '-', '_');
                           return s;
                         });

TEST(Properties, RandomFrameFieldsLaplacian) {
  const auto m = builtin("oscillator-frame").space;
  RandomRationals rng(99);
  const RatVector u{q(0), q(1), q(0), q(-1)};
  for (int trial = 0; trial < 20; ++trial) {
    const auto v = rng.vector(4);
    EXPECT_EQ(analyze_field(m, {v}).rough_laplacian, scale(q(-1, 2) * (v[1] + v[3]), u));
  }
}
