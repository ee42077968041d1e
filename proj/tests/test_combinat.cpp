#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "schur/combinat.hpp"

using namespace schur;

namespace {

// Brute-force SSYT count: fill the boxes row by row with symbols 1..len(mu).
std::int64_t ssyt_brute(const Partition& shape, const std::vector<int>& content) {
  const int rows = shape.length();
  std::vector<std::vector<int>> fill(rows);
  for (int r = 0; r < rows; ++r) fill[r].assign(shape(r + 1), 0);
  std::vector<int> left = content;
  const int symbols = static_cast<int>(content.size());
  std::int64_t count = 0;
  std::function<void(int, int)> go = [&](int r, int c) {
    if (r == rows) {
      ++count;
      return;
    }
    if (c == shape(r + 1)) {
      go(r + 1, 0);
      return;
    }
    for (int s = 1; s <= symbols; ++s) {
      if (left[s - 1] == 0) continue;
      if (c > 0 && fill[r][c - 1] > s) continue;
      if (r > 0 && fill[r - 1][c] >= s) continue;
      fill[r][c] = s;
      --left[s - 1];
      go(r, c + 1);
      ++left[s - 1];
    }
  };
  go(0, 0);
  return count;
}

// Number of partitions of n with at most k parts.
std::int64_t partition_count(int n, int k) {
  std::vector<std::vector<std::int64_t>> p(n + 1, std::vector<std::int64_t>(k + 1, 0));
  for (int j = 0; j <= k; ++j) p[0][j] = 1;
  for (int m = 1; m <= n; ++m)
    for (int j = 1; j <= k; ++j) p[m][j] = p[m][j - 1] + (m >= j ? p[m - j][j] : 0);
  return p[n][k];
}

std::int64_t hook_length_dim(const Partition& shape) {
  double denom = 1.0;
  for (int r = 1; r <= shape.length(); ++r)
    for (int c = 1; c <= shape(r); ++c) {
      int below = 0;
      for (int rr = r + 1; rr <= shape.length() && shape(rr) >= c; ++rr) ++below;
      denom *= shape(r) - c + below + 1;
    }
  return static_cast<std::int64_t>(std::llround(static_cast<double>(factorial(shape.size())) / denom));
}

std::int64_t weyl_dim(const Partition& shape, int d) {
  double num = 1.0, den = 1.0;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      num *= shape(i) - shape(j) + j - i;
      den *= j - i;
    }
  return std::llround(num / den);
}

std::vector<int> parts(const Partition& p) { return p.parts(); }

}  // namespace

TEST(Partitions, SmallCasesInCanonicalOrder) {
  auto two = enumerate_partitions(2, 2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(parts(two[0]), (std::vector<int>{2}));
  EXPECT_EQ(parts(two[1]), (std::vector<int>{1, 1}));

  auto four = enumerate_partitions(4, 2);
  ASSERT_EQ(four.size(), 3u);
  EXPECT_EQ(parts(four[0]), (std::vector<int>{4}));
  EXPECT_EQ(parts(four[1]), (std::vector<int>{3, 1}));
  EXPECT_EQ(parts(four[2]), (std::vector<int>{2, 2}));

  auto empty = enumerate_partitions(0, 3);
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_EQ(empty[0].size(), 0);
}

TEST(Partitions, CountsMatchRecurrenceAndOrderIsDescending) {
  for (int n = 0; n <= 9; ++n)
    for (int k = 1; k <= 6; ++k) {
      auto ps = enumerate_partitions(n, k);
      EXPECT_EQ(static_cast<std::int64_t>(ps.size()), partition_count(n, k)) << n << " " << k;
      for (std::size_t i = 1; i < ps.size(); ++i) EXPECT_GT(ps[i - 1], ps[i]);
      for (const auto& p : ps) {
        EXPECT_EQ(p.size(), n);
        EXPECT_LE(p.length(), k);
      }
    }
}

TEST(Partitions, RejectsIncreasingParts) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_EQ(Partition({2, 1, 0, 0}).parts(), (std::vector<int>{2, 1}));
}

TEST(Syt, TwoOneHasTwoWordsInOrder) {
  auto ts = enumerate_syt(Partition({2, 1}));
  ASSERT_EQ(ts.size(), 2u);
  EXPECT_EQ(ts[0].word(), (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(ts[1].word(), (std::vector<int>{1, 2, 1}));
}

TEST(Syt, SingleRowHasOneTableau) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(enumerate_syt(Partition({n})).size(), 1u);
}

TEST(Syt, TwoTwoContainsWord1212) {
  auto ts = enumerate_syt(Partition({2, 2}));
  const std::vector<int> w{1, 2, 1, 2};
  EXPECT_TRUE(std::any_of(ts.begin(), ts.end(), [&](const StandardTableau& t) { return t.word() == w; }));
  auto t = StandardTableau::from_word(w);
  EXPECT_EQ(t.filling(), (std::vector<std::vector<int>>{{1, 3}, {2, 4}}));
}

TEST(Syt, CountMatchesHookLengths) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& p : enumerate_partitions(n, n == 0 ? 1 : n)) {
      const auto ts = enumerate_syt(p);
      EXPECT_EQ(static_cast<std::int64_t>(ts.size()), hook_length_dim(p)) << p.str();
      EXPECT_EQ(syt_count(p), hook_length_dim(p));
      for (std::size_t i = 1; i < ts.size(); ++i) EXPECT_LT(ts[i - 1].word(), ts[i].word());
    }
}

TEST(Syt, ChainWordFillingRoundtrip) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_partitions(n, n))
      for (const auto& t : enumerate_syt(p)) {
        const auto chain = t.chain();
        ASSERT_EQ(static_cast<int>(chain.size()), n + 1);
        for (int i = 0; i <= n; ++i) EXPECT_EQ(chain[i].size(), i);
        EXPECT_EQ(StandardTableau::from_chain(chain), t);
        EXPECT_EQ(StandardTableau::from_filling(t.filling()), t);
        EXPECT_EQ(t.shape(), p);
      }
}

TEST(Syt, RejectsNonYamanouchiWord) {
  EXPECT_THROW(StandardTableau::from_word({2, 1}), std::invalid_argument);
}

TEST(Gt, DefiningAndSymmetricSquare) {
  auto one = enumerate_gt(Partition({1}), 2);
  ASSERT_EQ(one.size(), 2u);
  std::set<std::vector<int>> weights;
  for (const auto& m : one) weights.insert(gt_weight(m).entries());
  EXPECT_EQ(weights, (std::set<std::vector<int>>{{1, 0}, {0, 1}}));
  EXPECT_EQ(enumerate_gt(Partition({2}), 2).size(), 3u);
}

TEST(Gt, WorkedPatternPresentWithItsWeight) {
  const GTPattern m({{0}, {2, 0}, {2, 0, 0}, {2, 1, 0, 0}, {3, 2, 0, 0, 0}});
  auto all = enumerate_gt(Partition({3, 2}), 5);
  EXPECT_NE(std::find(all.begin(), all.end(), m), all.end());
  EXPECT_EQ(gt_weight(m).entries(), (std::vector<int>{0, 2, 0, 1, 2}));
}

TEST(Gt, RejectsTooManyRows) { EXPECT_THROW(enumerate_gt(Partition({1, 1, 1}), 2), std::invalid_argument); }

TEST(Gt, CountMatchesWeylDimensionAndWeightsAreValid) {
  for (int n = 0; n <= 5; ++n)
    for (int d = 1; d <= 5; ++d)
      for (const auto& p : enumerate_partitions(n, d)) {
        const auto ms = enumerate_gt(p, d);
        EXPECT_EQ(static_cast<std::int64_t>(ms.size()), weyl_dim(p, d)) << p.str() << " d=" << d;
        for (std::size_t i = 1; i < ms.size(); ++i) EXPECT_GT(ms[i - 1], ms[i]);
        for (const auto& m : ms) {
          EXPECT_TRUE(m.valid());
          const auto w = gt_weight(m).entries();
          EXPECT_EQ(std::accumulate(w.begin(), w.end(), 0), n);
          for (int x : w) EXPECT_GE(x, 0);
        }
      }
}

TEST(Gt, HighestWeightPatternHasWeightShape) {
  for (int d = 1; d <= 4; ++d)
    for (const auto& p : enumerate_partitions(5, d))
      EXPECT_EQ(gt_weight(highest_weight_pattern(p, d)).entries(), p.padded(d));
}

TEST(Compression, WorkedPair) {
  const GTPattern m({{0}, {2, 0}, {2, 0, 0}, {2, 1, 0, 0}, {3, 2, 0, 0, 0}});
  auto [small, p] = compress_gt(m);
  EXPECT_EQ(small, GTPattern({{2}, {2, 1}, {3, 2, 0}}));
  EXPECT_EQ(p.values(), (std::vector<int>{2, 4, 5}));
  EXPECT_EQ(decompress_gt(small, p, 5), m);
}

TEST(Compression, FullWeightIsUnchanged) {
  const GTPattern m({{1}, {2, 0}, {2, 1, 0}});
  ASSERT_EQ(gt_weight(m).entries(), (std::vector<int>{1, 1, 1}));
  auto [small, p] = compress_gt(m);
  EXPECT_EQ(small, m);
  EXPECT_EQ(p.values(), (std::vector<int>{1, 2, 3}));
}

TEST(Compression, ExhaustiveRoundtrip) {
  for (int n = 1; n <= 5; ++n)
    for (int d = 1; d <= 5; ++d)
      for (const auto& shape : enumerate_partitions(n, d))
        for (const auto& m : enumerate_gt(shape, d)) {
          auto [small, p] = compress_gt(m);
          const auto w = gt_weight(small).entries();
          EXPECT_EQ(static_cast<int>(w.size()), p.length());
          for (int x : w) EXPECT_GT(x, 0);
          EXPECT_EQ(decompress_gt(small, p, d), m);
        }
}

TEST(Compression, DecompressRejectsBadAlphabet) {
  const GTPattern small({{2}, {2, 1}, {3, 2, 0}});
  EXPECT_THROW(decompress_gt(small, AlphabetMap({2, 4}), 5), std::invalid_argument);
  EXPECT_THROW(AlphabetMap({4, 2, 5}), std::invalid_argument);
  EXPECT_THROW(decompress_gt(small, AlphabetMap({2, 4, 6}), 5), std::invalid_argument);
}

TEST(Weights, SplitAndJoin) {
  const Weight w({0, 2, 0, 1, 2});
  auto [mu, p] = w.split();
  EXPECT_EQ(mu.parts(), (std::vector<int>{2, 1, 2}));
  EXPECT_EQ(p.values(), (std::vector<int>{2, 4, 5}));
  EXPECT_EQ(Weight::join(mu, p, 5), w);
  auto ws = enumerate_weights(3, 3);
  EXPECT_EQ(ws.size(), 10u);
  for (std::size_t i = 1; i < ws.size(); ++i) EXPECT_LT(ws[i - 1], ws[i]);
}

TEST(Kostka, SmallValues) {
  EXPECT_EQ(kostka(Partition({2, 1}), Composition({1, 1, 1})), 2);
  EXPECT_EQ(kostka(Partition({1, 1}), Composition({2})), 0);
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_partitions(n, n)) EXPECT_EQ(kostka(p, Composition(p.parts())), 1);
}

TEST(Kostka, MatchesBruteForceSsytAndIsSymmetric) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& shape : enumerate_partitions(n, n))
      for (const auto& mu : enumerate_compositions(n)) {
        const std::int64_t k = kostka(shape, mu);
        EXPECT_EQ(k, ssyt_brute(shape, mu.parts())) << shape.str();
        std::vector<int> sorted = mu.parts();
        std::sort(sorted.rbegin(), sorted.rend());
        EXPECT_EQ(k, kostka(shape, Composition(sorted)));
      }
}

TEST(Kostka, WeightWithZerosAgreesWithComposition) {
  EXPECT_EQ(kostka(Partition({3, 2}), Weight({0, 2, 0, 1, 2})), kostka(Partition({3, 2}), Composition({2, 1, 2})));
}

TEST(Addable, Rows) {
  EXPECT_EQ(addable_rows(Partition(), 2), (std::vector<int>{1}));
  EXPECT_EQ(addable_rows(Partition({2, 1}), 3), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(addable_rows(Partition({2, 2}), 2), (std::vector<int>{1}));
}

TEST(AxialDistance, RowsAndColumns) {
  const auto row = StandardTableau::from_word({1, 1, 1, 1});
  const auto col = StandardTableau::from_word({1, 2, 3, 4});
  for (int i = 1; i <= 3; ++i) {
    EXPECT_EQ(axial_distance(row, i), 1);
    EXPECT_EQ(axial_distance(col, i), -1);
  }
  EXPECT_EQ(std::abs(axial_distance(StandardTableau::from_word({1, 2, 1, 2}), 2)), 2);
}

TEST(Counting, DimensionsFillTensorSpace) {
  for (int n = 0; n <= 6; ++n)
    for (int d = 1; d <= 5; ++d) {
      std::int64_t total = 0, expect = 1;
      for (int i = 0; i < n; ++i) expect *= d;
      for (const auto& p : enumerate_partitions(n, d))
        total += syt_count(p) * static_cast<std::int64_t>(enumerate_gt(p, d).size());
      EXPECT_EQ(total, expect) << n << " " << d;
    }
}

TEST(Counting, SquaresSumToFactorial) {
  for (int n = 0; n <= 7; ++n) {
    std::int64_t total = 0;
    for (const auto& p : enumerate_partitions(n, n == 0 ? 1 : n)) {
      const auto k = static_cast<std::int64_t>(enumerate_syt(p).size());
      total += k * k;
    }
    EXPECT_EQ(total, factorial(n));
  }
}
