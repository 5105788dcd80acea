#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "fpbl/random.hpp"
#include "philox_kat.hpp"

using namespace fpbl;

TEST(Philox, KnownAnswers) {
  for (const auto& v : oracle::kPhiloxVectors) EXPECT_EQ(philox4x64(v.counter, v.key), v.output);
}

TEST(Philox, SourceStreamsBlocksInOrder) {
  RandomSource r(7, 3);
  const auto b0 = philox4x64({0, 0, 0, 0}, {7, 3});
  const auto b1 = philox4x64({1, 0, 0, 0}, {7, 3});
  for (auto x : b0) EXPECT_EQ(r(), x);
  for (auto x : b1) EXPECT_EQ(r(), x);
  EXPECT_EQ(b1, oracle::kPhiloxVectors[2].output);
}

TEST(RandomSource, Deterministic) {
  RandomSource a(42, 1), b(42, 1), c(42, 2), d(43, 1);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    seen.insert(x);
    EXPECT_NE(x, c());
    EXPECT_NE(x, d());
  }
  EXPECT_EQ(seen.size(), 1000u);
}

TEST(RandomSource, SubstreamsAreDisjointAndReproducible) {
  const RandomSource base(5, 0);
  auto s1 = base.substream(0), s1b = base.substream(0), s2 = base.substream(1);
  RandomSource parent = base;
  for (int i = 0; i < 100; ++i) {
    const auto x = s1();
    EXPECT_EQ(x, s1b());
    EXPECT_NE(x, s2());
    EXPECT_NE(x, parent());
  }
  EXPECT_EQ(s2.substream_index(), 2u);
}

TEST(RandomSource, BoundedIntegersAreUniform) {
  RandomSource r(1);
  std::vector<int> hist(7, 0);
  const int N = 700000;
  for (int i = 0; i < N; ++i) ++hist[r.below(std::uint64_t{7})];
  for (int h : hist) EXPECT_NEAR(h, N / 7.0, 5 * std::sqrt(N / 7.0));
  EXPECT_EQ(r.below(std::uint64_t{1}), 0u);
}

TEST(RandomSource, BigBoundedIntegers) {
  RandomSource r(2);
  const BigInt bound = (BigInt(1) << 200) + 12345;
  bool high = false;
  for (int i = 0; i < 2000; ++i) {
    const BigInt x = r.below(bound);
    ASSERT_GE(sgn(x), 0);
    ASSERT_LT(x, bound);
    if (x >= (BigInt(1) << 199)) high = true;
  }
  EXPECT_TRUE(high);
  // Small bounds through the big path agree in distribution with the fast path.
  std::vector<int> hist(3, 0);
  for (int i = 0; i < 30000; ++i) ++hist[r.below(BigInt(3)).get_ui()];
  for (int h : hist) EXPECT_NEAR(h, 10000, 500);
}

TEST(RandomSource, ExactBernoulli) {
  RandomSource r(3);
  for (const char* ps : {"1/3", "1/1024", "999/1000"}) {
    const Rational p(ps);
    const int N = 200000;
    int hits = 0;
    for (int i = 0; i < N; ++i) hits += r.bernoulli(p);
    const double mu = N * p.get_d();
    EXPECT_NEAR(hits, mu, 5 * std::sqrt(mu * (1 - p.get_d())) + 1) << ps;
  }
  // A denominator beyond 64 bits takes the big-integer path.
  Rational tiny(BigInt(1), BigInt(1) << 100);
  Rational big = 1 - tiny;
  for (int i = 0; i < 1000; ++i) {
    EXPECT_FALSE(r.bernoulli(tiny));
    EXPECT_TRUE(r.bernoulli(big));
  }
  EXPECT_FALSE(r.bernoulli(0));
  EXPECT_TRUE(r.bernoulli(1));
  EXPECT_THROW(r.bernoulli(2), std::invalid_argument);
}

TEST(RandomSource, Uniform01Range) {
  RandomSource r(4);
  double s = 0;
  for (int i = 0; i < 100000; ++i) {
    const double u = r.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    s += u;
  }
  EXPECT_NEAR(s / 100000, 0.5, 0.005);
}
