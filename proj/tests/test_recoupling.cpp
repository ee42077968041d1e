#include <gtest/gtest.h>

#include <cmath>

#include "schur/recoupling.hpp"
#include "schur/verify.hpp"

using namespace schur;

namespace {

bool strip(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return false;
  for (int i = 1; i <= outer.length(); ++i)
    if (outer(i + 1) > inner(i)) return false;
  return true;
}

ComplexMatrix defining_generator(int d, int k, int l) {
  ComplexMatrix e = ComplexMatrix::Zero(d, d);
  e(k - 1, l - 1) = 1.0;
  return e;
}

// Matrix of E_{k,l} on the direct sum of CG targets.
ComplexMatrix target_generator(const CGBlock& b, int k, int l) {
  ComplexMatrix out = ComplexMatrix::Zero(b.matrix.rows(), b.matrix.rows());
  for (std::size_t c = 0; c < b.targets.size(); ++c) {
    const ComplexMatrix g = gl_generator(b.targets[c], k, l);
    out.block(b.offsets[c], b.offsets[c], g.rows(), g.cols()) = g;
  }
  return out;
}

}  // namespace

TEST(FLeft, VacuumAndTwoOne) {
  EXPECT_NEAR(f_left(1, Partition(), Partition({1}), 1), 1.0, 1e-15);
  EXPECT_NEAR(f_left(2, Partition({1}), Partition({2, 1}), 1), 0.5, 1e-15);
  EXPECT_NEAR(f_left(2, Partition({1}), Partition({2, 1}), 2), std::sqrt(3.0) / 2, 1e-15);
}

TEST(FRight, VacuumAndTwoOne) {
  EXPECT_NEAR(f_right(1, Partition(), Partition({1}), 1), 1.0, 1e-15);
  const double a = f_right(2, Partition({1}), Partition({2, 1}), 1);
  const double b = f_right(2, Partition({1}), Partition({2, 1}), 2);
  EXPECT_NEAR(a * a + b * b, 1.0, 1e-15);
}

TEST(FSymbols, RowsAreUnitVectors) {
  for (int total = 1; total <= 6; ++total)
    for (const auto& nu : enumerate_partitions(total, total))
      for (int size = 0; size < total; ++size)
        for (const auto& base : enumerate_partitions(size, size == 0 ? 1 : size)) {
          if (!strip(nu, base)) continue;
          const int k = total - size;
          double left = 0.0, right = 0.0;
          for (int a = 1; a <= base.length() + 1; ++a) {
            if (!base.can_add(a)) continue;
            const double v = f_left(k, base, nu, a);
            EXPECT_GE(v, 0.0);
            left += v * v;
          }
          for (int r = 1; r <= nu.length(); ++r) {
            if (!nu.can_remove(r)) continue;
            const double v = f_right(k, base, nu, r);
            EXPECT_GE(v, 0.0);
            right += v * v;
          }
          EXPECT_NEAR(left, 1.0, 1e-12) << base.str() << " " << nu.str();
          EXPECT_NEAR(right, 1.0, 1e-12) << base.str() << " " << nu.str();
        }
}

TEST(FSymbols, RejectsNonStrip) {
  EXPECT_THROW(f_left(2, Partition({1}), Partition({1, 1, 1}), 1), std::invalid_argument);
}

TEST(FSymbols, AgreeWithFusionTreeOverlaps) {
  for (int total = 1; total <= 5; ++total)
    for (const auto& nu : enumerate_partitions(total, total)) {
      const CheckReport r = check_fsymbols_against_trees(nu);
      EXPECT_TRUE(r.pass) << r.str();
    }
}

TEST(ReducedWigner, DepthOneIsUnit) {
  for (int m = 0; m <= 4; ++m) EXPECT_NEAR(std::abs(rw_entry({m}, {}, 1, 0)), 1.0, 1e-15);
}

TEST(ReducedWigner, ColumnsOrthonormal) {
  for (int n = 0; n <= 5; ++n)
    for (int d = 2; d <= 5; ++d)
      for (const auto& shape : enumerate_partitions(n, d))
        for (const auto& m : enumerate_gt(shape, d)) {
          const RealMatrix w = rw_matrix(m.row(d), m.row(d - 1));
          const RealMatrix gram = w.transpose() * w;
          for (Eigen::Index c = 0; c < gram.rows(); ++c) {
            if (gram(c, c) < 1e-12) continue;  // unreachable column
            EXPECT_NEAR(gram(c, c), 1.0, 1e-12) << m.str();
            for (Eigen::Index c2 = 0; c2 < gram.cols(); ++c2)
              if (c2 != c && gram(c2, c2) > 1e-12) EXPECT_NEAR(gram(c, c2), 0.0, 1e-12) << m.str();
          }
        }
}

TEST(ReducedWigner, PaddingInvariance) {
  const CheckReport r = check_rw_padding(5, 5);
  EXPECT_TRUE(r.pass) << r.str();
}

TEST(CgTransform, VacuumIsIdentity) {
  for (int d = 1; d <= 4; ++d) {
    const CGBlock b = cg_transform(Partition(), d);
    EXPECT_LT(max_abs_diff(b.matrix, ComplexMatrix::Identity(d, d)), 1e-15);
  }
}

TEST(CgTransform, SpinHalfPair) {
  const CGBlock b = cg_transform(Partition({1}), 2);
  ASSERT_EQ(b.matrix.rows(), 4);
  EXPECT_EQ(b.channels, (std::vector<int>{1, 2}));
  const double h = 1.0 / std::sqrt(2.0);
  for (Eigen::Index r = 0; r < 4; ++r)
    for (Eigen::Index c = 0; c < 4; ++c) {
      const double v = std::abs(b.matrix(r, c).real());
      EXPECT_TRUE(v < 1e-15 || std::abs(v - 1.0) < 1e-15 || std::abs(v - h) < 1e-15) << v;
    }
  EXPECT_LT(unitarity_deviation(b.matrix), 1e-15);
}

TEST(CgTransform, UnitaryAndEquivariant) {
  for (int n = 0; n <= 4; ++n)
    for (int d = 1; d <= 4; ++d)
      for (const auto& shape : enumerate_partitions(n, d)) {
        const CGBlock b = cg_transform(shape, d);
        EXPECT_LT(unitarity_deviation(b.matrix), 1e-12) << shape.str() << " d=" << d;
        const ComplexMatrix id_src = ComplexMatrix::Identity(b.source.dim(), b.source.dim());
        const ComplexMatrix id_def = ComplexMatrix::Identity(d, d);
        for (auto [k, l] : adjacent_generators(d)) {
          const ComplexMatrix src =
              kron(gl_generator(b.source, k, l), id_def) + kron(id_src, defining_generator(d, k, l));
          EXPECT_LT(max_abs_diff(b.matrix * src, target_generator(b, k, l) * b.matrix), 1e-9)
              << shape.str() << " d=" << d << " E" << k << l;
        }
      }
}

TEST(CgTransform, MatchesHighestWeightOracle) {
  for (int n = 0; n <= 4; ++n)
    for (int d = 1; d <= 4; ++d)
      for (const auto& shape : enumerate_partitions(n, d)) {
        const CheckReport r = compare_cg_with_oracle(shape, d);
        EXPECT_TRUE(r.pass) << r.str();
      }
}

TEST(CgColumn, NormOne) {
  for (int d = 1; d <= 4; ++d)
    for (const auto& shape : enumerate_partitions(3, d))
      for (const auto& m : enumerate_gt(shape, d))
        for (int x = 1; x <= d; ++x) {
          double s = 0.0;
          for (const auto& [t, c] : cg_column(m, x)) s += c * c;
          EXPECT_NEAR(s, 1.0, 1e-12);
        }
}
