#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "sidonlab/setcore.hpp"

using namespace sidonlab;

TEST(PointSet, ConstructionDedupesAndSorts) {
  const PointSet s(3, {5, 1, 5, 0});
  EXPECT_EQ(s.members(), (std::vector<Point>{0, 1, 5}));
  EXPECT_EQ(s.size(), 3U);
  EXPECT_TRUE(s.contains(5));
  EXPECT_FALSE(s.contains(4));
  EXPECT_EQ(s.universe(), 8U);
  EXPECT_THROW(PointSet(3, {8}), ArgumentError);
  EXPECT_THROW(PointSet(23), ArgumentError);
  EXPECT_EQ(PointSet::full(2).size(), 4U);
  EXPECT_EQ(s.translate(1), PointSet(3, {1, 0, 4}));
  EXPECT_EQ(s.with(2).size(), 4U);
}

TEST(LinearAlgebra, RankAndSpan) {
  const std::vector<Point> v{3, 5, 6, 8};
  EXPECT_EQ(linear_rank(4, v), 3);
  LinearBasis b(4);
  for (Point x : v) b.insert(x);
  EXPECT_TRUE(b.in_span(6 ^ 8));
  EXPECT_FALSE(b.in_span(1));
}

TEST(LinearAlgebra, AffineInverseRoundTrip) {
  auto r = gen::rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = gen::uniform_int(r, 1, 10);
    std::vector<Point> cols;
    LinearBasis b(n);
    while (static_cast<int>(cols.size()) < n) {
      const auto c = static_cast<Point>(r() % dim_size(n));
      if (b.insert(c)) cols.push_back(c);
    }
    const AffineMap m = AffineMap::from_columns(n, n, cols);
    ASSERT_TRUE(m.is_invertible());
    const AffineMap inv = m.inverse();
    for (Point x = 0; x < dim_size(n); x += 1 + static_cast<Point>(r() % 7)) ASSERT_EQ(inv(m(x)), x);
  }
  const AffineMap singular = AffineMap::from_columns(2, 2, std::vector<Point>{1, 1});
  EXPECT_FALSE(singular.is_invertible());
  EXPECT_THROW(singular.inverse(), ArgumentError);
}

TEST(Sidon, KnownSets) {
  EXPECT_TRUE(is_sidon(PointSet(3, {0, 1, 2, 4})));
  EXPECT_FALSE(is_sidon(PointSet(2, {0, 1, 2, 3})));
  EXPECT_TRUE(is_sidon(PointSet(2, {0, 1, 2})));
  EXPECT_TRUE(is_sidon(PointSet(4)));
  EXPECT_TRUE(is_sidon(PointSet(4, {7})));
}

TEST(Sidon, MatchesFourSumOracle) {
  auto r = gen::rng(3);
  for (int i = 0; i < 3000; ++i) {
    const int n = gen::uniform_int(r, 1, 7);
    const PointSet s = gen::small_subset(r, n, 14);
    ASSERT_EQ(is_sidon(s), oracle::is_sidon(s)) << i;
  }
}

TEST(Exclude, MultiplicityMatchesTripleCount) {
  auto r = gen::rng(4);
  for (int i = 0; i < 300; ++i) {
    const int n = gen::uniform_int(r, 2, 7);
    const PointSet s = gen::small_subset(r, n, 12);
    const auto counts = exclude_counts(s);
    for (Point p = 0; p < s.universe(); ++p) {
      ASSERT_EQ(counts[p], oracle::exclude_multiplicity(s, p));
      if (!s.contains(p)) { ASSERT_EQ(exclude_multiplicity(s, p), counts[p]); }
    }
    for (Point p : excludes(s)) ASSERT_GT(counts[p], 0U);
  }
  EXPECT_THROW(exclude_multiplicity(PointSet(3, {1, 2}), 1), ArgumentError);
}

TEST(Maximal, MatchesExtensionOracle) {
  auto r = gen::rng(5);
  for (int i = 0; i < 400; ++i) {
    const int n = gen::uniform_int(r, 2, 6);
    const PointSet s = gen::sidon(r, n);
    if (s.size() <= 1) {
      EXPECT_FALSE(is_maximal(s));
      continue;
    }
    ASSERT_EQ(is_maximal(s), oracle::is_maximal_sidon(s)) << i;
  }
  for (int i = 0; i < 50; ++i) EXPECT_TRUE(is_maximal(gen::maximal_sidon(r, 6)));
  EXPECT_THROW(is_maximal(PointSet(2, {0, 1, 2, 3})), ArgumentError);
}

TEST(KCover, SmallExamples) {
  // Three points of F_2^2: the single outside point is their sum.
  EXPECT_EQ(kcover_value(PointSet(2, {0, 1, 2})), 1U);
  // Affine basis of F_2^3: each outside point is the sum of exactly one triple.
  EXPECT_EQ(kcover_value(PointSet(3, {0, 1, 2, 4})), 1U);
  // 15 is not the sum of three members of {0, 1, 2, 4, 8}.
  EXPECT_EQ(kcover_value(PointSet(4, {0, 1, 2, 4, 8})), std::nullopt);
  EXPECT_THROW(kcover_value(PointSet(3, {0, 1})), ArgumentError);
  EXPECT_THROW(kcover_value(PointSet(2, {0, 1, 2, 3})), ArgumentError);
}

TEST(KCover, DefinitionOnRandomMaximalSets) {
  auto r = gen::rng(6);
  for (int i = 0; i < 300; ++i) {
    const int n = gen::uniform_int(r, 3, 7);
    const PointSet s = gen::maximal_sidon(r, n);
    if (s.size() < 3 || s.size() == s.universe()) continue;
    std::optional<std::uint64_t> want;
    bool uniform = true;
    for (Point p = 0; p < s.universe() && uniform; ++p) {
      if (s.contains(p)) continue;
      const auto m = oracle::exclude_multiplicity(s, p);
      if (!want) want = m;
      else if (*want != m) uniform = false;
    }
    ASSERT_EQ(kcover_value(s), uniform ? want : std::nullopt);
  }
}

TEST(Affine, DimensionAndSpan) {
  EXPECT_EQ(affine_dimension(PointSet(4, {5})), 0);
  EXPECT_EQ(affine_dimension(PointSet(4, {1, 2, 4, 8, 0})), 4);
  EXPECT_EQ(affine_dimension(PointSet(4, {1, 2, 3})), 2);
  EXPECT_EQ(affine_dimension(PointSet(4, {1, 3, 5, 7})), 2);
  EXPECT_EQ(affine_span(PointSet(4, {1, 2, 4})), PointSet(4, {1, 2, 4, 7}));
  EXPECT_THROW(affine_dimension(PointSet(3)), ArgumentError);
}

TEST(Affine, InvariantUnderAffineMaps) {
  auto r = gen::rng(7);
  for (int i = 0; i < 100; ++i) {
    const int n = gen::uniform_int(r, 2, 8);
    const PointSet s = gen::sidon(r, n);
    if (s.empty()) continue;
    std::vector<Point> cols;
    LinearBasis b(n);
    while (static_cast<int>(cols.size()) < n) {
      const auto c = static_cast<Point>(r() % dim_size(n));
      if (b.insert(c)) cols.push_back(c);
    }
    const auto off = static_cast<Point>(r() % dim_size(n));
    const AffineMap m = AffineMap::from_columns(n, n, cols, off);
    const PointSet t = apply_affine(s, m);
    EXPECT_EQ(t.size(), s.size());
    EXPECT_TRUE(is_sidon(t));
    EXPECT_EQ(affine_dimension(t), affine_dimension(s));
    EXPECT_EQ(is_separable(t), is_separable(s));
    if (s.size() >= 2) { EXPECT_EQ(is_maximal(t), is_maximal(s)); }
  }
}

TEST(Separable, TransformMatchesHyperplaneCount) {
  auto r = gen::rng(8);
  for (int i = 0; i < 1000; ++i) {
    const int n = gen::uniform_int(r, 1, 7);
    const PointSet s = gen::subset(r, n);
    ASSERT_EQ(is_separable(s), is_separable_by_hyperplanes(s)) << i;
  }
  EXPECT_FALSE(is_separable(PointSet(3, {0, 1, 2})));
  EXPECT_TRUE(is_separable(PointSet(3, {0, 1})));
}

TEST(Restrict, HyperplaneDropsPivot) {
  const PointSet s(3, {0, 1, 2, 4, 7});
  const PointSet h = hyperplane_restrict(s, 0b010, 0);
  // Members with bit 1 clear: 0, 1, 4; bit 1 deleted: 0, 1, 2.
  EXPECT_EQ(h, PointSet(2, {0, 1, 2}));
  EXPECT_EQ(drop_coordinate(0b1011, 1), 0b101U);
  EXPECT_THROW(hyperplane_restrict(s, 0, 0), ArgumentError);
  EXPECT_THROW(hyperplane_restrict(s, 1, 2), ArgumentError);
}

TEST(Restrict, PreservesSidon) {
  auto r = gen::rng(9);
  for (int i = 0; i < 200; ++i) {
    const int n = gen::uniform_int(r, 2, 8);
    const PointSet s = gen::sidon(r, n);
    const auto a = static_cast<Point>(1 + r() % (dim_size(n) - 1));
    const PointSet h = hyperplane_restrict(s, a, static_cast<int>(r() & 1));
    EXPECT_TRUE(is_sidon(h));
  }
}
