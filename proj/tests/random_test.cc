#include "groupmatch/random.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

namespace groupmatch {
namespace {

TEST(RngTest, SameSeedSameStream) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.Next(), b.Next());
}

TEST(RngTest, MersenneTwisterReferenceValue) {
  // The 10000th output of a default-seeded mt19937_64 is fixed by the C++
  // standard; seeding with 5489 reproduces it.
  Rng rng(5489);
  std::uint64_t v = 0;
  for (int i = 0; i < 10000; ++i) v = rng.Next();
  EXPECT_EQ(v, 9981545732273789042ULL);
}

TEST(RngTest, DerivedStreamsDiffer) {
  EXPECT_NE(MixSeed(1, "split"), MixSeed(1, "negatives"));
  EXPECT_NE(MixSeed(1, "split"), MixSeed(2, "split"));
  EXPECT_EQ(MixSeed(7, "split"), MixSeed(7, "split"));
  Rng a = Rng::Derive(1, "split");
  Rng b = Rng::Derive(1, "split");
  EXPECT_EQ(a.Next(), b.Next());
}

TEST(RngTest, UniformStaysInRangeAndCoversIt) {
  Rng rng(3);
  std::vector<int> seen(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto v = rng.Uniform(7);
    ASSERT_LT(v, 7u);
    ++seen[v];
  }
  for (int c : seen) EXPECT_NEAR(c, 1000, 150);
  for (int i = 0; i < 1000; ++i) {
    const auto v = rng.UniformIn(3, 5);
    EXPECT_GE(v, 3u);
    EXPECT_LE(v, 5u);
  }
}

TEST(RngTest, UnitRealAndBernoulli) {
  Rng rng(9);
  int hits = 0;
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.UnitReal();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    hits += rng.Bernoulli(0.25);
  }
  EXPECT_NEAR(hits, 2500, 200);
  EXPECT_FALSE(rng.Bernoulli(0.0));
  EXPECT_TRUE(rng.Bernoulli(1.0));
}

TEST(RngTest, ShuffleIsPermutation) {
  Rng rng(11);
  std::vector<int> v(50);
  std::iota(v.begin(), v.end(), 0);
  auto copy = v;
  rng.Shuffle(std::span<int>(copy));
  EXPECT_NE(copy, v);
  std::sort(copy.begin(), copy.end());
  EXPECT_EQ(copy, v);
}

}  // namespace
}  // namespace groupmatch
