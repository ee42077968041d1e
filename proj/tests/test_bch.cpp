#include <gtest/gtest.h>

#include <cmath>

#include "schur/bch.hpp"
#include "schur/krovi.hpp"
#include "schur/verify.hpp"

using namespace schur;

TEST(Cascade, NormPreservedAtEveryStep) {
  for (int d = 1; d <= 3; ++d)
    for (std::size_t idx = 0; idx < checked_dimension(4, d); ++idx) {
      std::vector<double> norms;
      run_cascade(string_at(idx, 4, d), d, &norms);
      ASSERT_EQ(norms.size(), 5u);
      for (double v : norms) EXPECT_NEAR(v, 1.0, 1e-12);
    }
}

TEST(Cascade, RejectsLetterOutsideDepth) {
  EXPECT_THROW(cascade_step(cascade_start(2), 3), std::out_of_range);
}

TEST(Cascade, PaddingInvariance) {
  for (auto [n, small, large] : std::vector<std::tuple<int, int, int>>{{3, 2, 3}, {3, 2, 5}, {4, 2, 4}, {4, 3, 4}}) {
    const CheckReport r = check_cascade_padding(n, small, large);
    EXPECT_TRUE(r.pass) << r.str();
  }
}

TEST(BchTransform, OneSiteIsIdentity) {
  for (int d = 1; d <= 5; ++d) {
    EXPECT_LT(max_abs_diff(schur_unitary_bch(1, d).dense(), ComplexMatrix::Identity(d, d)), 1e-15);
    EXPECT_LT(max_abs_diff(schur_unitary_bch_highdim(1, d).dense(), ComplexMatrix::Identity(d, d)), 1e-15);
  }
}

TEST(BchTransform, TwoQubitsMatchSpinCoupling) {
  const ComplexMatrix u = schur_unitary_bch(2, 2).dense();
  const double h = 1.0 / std::sqrt(2.0);
  for (Eigen::Index r = 0; r < 4; ++r)
    for (Eigen::Index c = 0; c < 4; ++c) {
      const double v = std::abs(u(r, c));
      EXPECT_TRUE(v < 1e-15 || std::abs(v - 1.0) < 1e-15 || std::abs(v - h) < 1e-15);
    }
  EXPECT_LT(unitarity_deviation(u), 1e-15);
}

TEST(BchTransform, UnitaryAndEquivariant) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}}) {
    for (const SchurTransform& u : {schur_unitary_bch(n, d), schur_unitary_bch_highdim(n, d)}) {
      EXPECT_TRUE(check_unitarity(u, "bch").pass);
      const auto sym = check_schur_equivariance(u, Side::Sym, "bch", kExactTol);
      const auto gl = check_schur_equivariance(u, Side::Gl, "bch", kChainTol);
      EXPECT_TRUE(sym.pass) << sym.str();
      EXPECT_TRUE(gl.pass) << gl.str();
    }
  }
}

TEST(BchHighdim, EqualsPlainWhenDepthIsN) {
  for (int n = 1; n <= 4; ++n)
    EXPECT_LT(max_abs_diff(schur_unitary_bch(n, n).dense(), schur_unitary_bch_highdim(n, n).dense()), 1e-12) << n;
}

TEST(BchHighdim, AgreesWithPlainUpToShapeSigns) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 4}, {3, 5}}) {
    const auto cmp = compare_pipelines(schur_unitary_bch_highdim(n, d), schur_unitary_bch(n, d), "highdim", kExactTol);
    EXPECT_TRUE(cmp.report.pass) << cmp.report.str();
    EXPECT_EQ(unitarity_deviation(schur_unitary_bch_highdim(n, d).dense()) < 1e-10, true);
  }
}

TEST(BchTransform, AgreesWithKroviUpToShapeSigns) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}, {4, 2}}) {
    const auto cmp = compare_pipelines(n, d);
    EXPECT_TRUE(cmp.report.pass) << cmp.report.str();
    for (const auto& [shape, sign] : cmp.signs) EXPECT_TRUE(sign == 1 || sign == -1);
  }
}
