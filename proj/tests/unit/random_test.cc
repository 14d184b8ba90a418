#include "nliart/random.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace nliart {
namespace {

// 0.999 quantile of chi-square with 9 degrees of freedom.
constexpr double kChi2Df9Critical = 27.877;

TEST(Rng, SeedingMatchesSeedSeqConstruction) {
  const std::uint64_t seed = 0x1234'5678'9abc'def0ULL;
  std::seed_seq seq{0x9abcdef0u, 0x12345678u, 7u, 0u};
  std::mt19937_64 reference(seq);
  Rng rng = Rng::ForStream(seed, {7});
  for (int i = 0; i < 100; ++i) ASSERT_EQ(rng.Next(), reference());
}

TEST(Rng, PlainSeedIsStreamWithoutKeys) {
  Rng a(99);
  Rng b = Rng::ForStream(99, {});
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.Next(), b.Next());
}

TEST(Rng, StreamsDiffer) {
  Rng a = Rng::ForStream(1, {0, 0});
  Rng b = Rng::ForStream(1, {0, 1});
  Rng c = Rng::ForStream(1, {1, 0});
  const auto x = a.Next(), y = b.Next(), z = c.Next();
  EXPECT_NE(x, y);
  EXPECT_NE(x, z);
  EXPECT_NE(y, z);
}

TEST(Rng, BelowStaysInRangeAndIsUniform) {
  Rng rng(5);
  std::array<int, 10> counts{};
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const auto v = rng.Below(10);
    ASSERT_LT(v, 10u);
    ++counts[v];
  }
  double stat = 0.0;
  for (int c : counts) stat += (c - n / 10.0) * (c - n / 10.0) / (n / 10.0);
  EXPECT_LT(stat, kChi2Df9Critical);

  EXPECT_EQ(rng.Below(1), 0u);
  EXPECT_THROW(rng.Below(0), std::invalid_argument);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(rng.Below(~0ULL), ~0ULL);
}

TEST(Rng, UniformHalfOpen) {
  Rng rng(11);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.Uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.005);
}

TEST(Rng, WeightedFollowsWeights) {
  Rng rng(3);
  const std::vector<double> w = {1.0, 0.0, 3.0};
  std::array<int, 3> counts{};
  for (int i = 0; i < 40000; ++i) ++counts[rng.Weighted(w)];
  EXPECT_EQ(counts[1], 0);
  EXPECT_NEAR(counts[0] / 40000.0, 0.25, 0.01);
  EXPECT_NEAR(counts[2] / 40000.0, 0.75, 0.01);

  const std::vector<double> zero = {0.0, 0.0};
  const std::vector<double> negative = {1.0, -1.0};
  EXPECT_THROW(rng.Weighted(zero), std::invalid_argument);
  EXPECT_THROW(rng.Weighted(negative), std::invalid_argument);
}

TEST(Rng, ShuffleIsPermutationAndDeterministic) {
  std::vector<int> a(50), b(50);
  std::iota(a.begin(), a.end(), 0);
  b = a;
  Rng r1(8), r2(8);
  r1.Shuffle(std::span<int>(a));
  r2.Shuffle(std::span<int>(b));
  EXPECT_EQ(a, b);
  EXPECT_TRUE(std::is_permutation(a.begin(), a.end(), b.begin()));
  std::vector<int> sorted = a;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 50; ++i) EXPECT_EQ(sorted[i], i);
  EXPECT_NE(a, sorted);
}

TEST(Rng, ShuffleFirstPositionIsUniform) {
  std::array<int, 4> first{};
  Rng rng(21);
  for (int t = 0; t < 40000; ++t) {
    std::array<int, 4> v = {0, 1, 2, 3};
    rng.Shuffle(std::span<int>(v));
    ++first[v[0]];
  }
  for (int c : first) EXPECT_NEAR(c / 40000.0, 0.25, 0.015);
}

}  // namespace
}  // namespace nliart
