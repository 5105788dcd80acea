#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "fpbl/distance.hpp"
#include "fpbl/dyck.hpp"
#include "fpbl/enumerate.hpp"
#include "fpbl/errors.hpp"
#include "fpbl/samplers.hpp"
#include "fpbl/series.hpp"
#include "helpers.hpp"

using namespace fpbl;

namespace {

// |count - N p| <= z sqrt(N p (1-p)).
void expect_binomial_band(std::size_t count, std::size_t N, double p, double z, const std::string& what) {
  const double mu = N * p;
  const double sd = std::sqrt(N * p * (1 - p));
  EXPECT_LE(std::fabs(count - mu), z * sd + 1e-9) << what << " count=" << count << " expected=" << mu;
}

}  // namespace

TEST(Dyck, UniformPathsAreValid) {
  RandomSource r(1);
  for (std::size_t n = 0; n <= 40; ++n) {
    for (int i = 0; i < 50; ++i) {
      const auto p = uniform_dyck(n, r);
      ASSERT_EQ(p.semilength(), n);
      ASSERT_TRUE(p.valid());
    }
  }
  EXPECT_EQ(uniform_dyck(1, r).to_string(), "UD");
}

TEST(Dyck, UniformOverCatalanPaths) {
  RandomSource r(2);
  for (std::size_t n : {2u, 3u}) {
    const auto all = all_dyck_paths(n);
    std::map<std::string, std::size_t> hist;
    const std::size_t N = 100000;
    for (std::size_t i = 0; i < N; ++i) ++hist[uniform_dyck(n, r).to_string()];
    ASSERT_EQ(hist.size(), all.size());
    for (const auto& p : all) expect_binomial_band(hist[p.to_string()], N, 1.0 / all.size(), 3, p.to_string());
  }
}

TEST(Dyck, ParseAndPrint) {
  EXPECT_EQ(DyckPath::parse("UUDD").to_string(), "UUDD");
  EXPECT_THROW(DyckPath::parse("UDDU"), std::invalid_argument);
  EXPECT_THROW(DyckPath::parse("UX"), std::invalid_argument);
  EXPECT_EQ(all_dyck_paths(4).size(), 14u);
}

TEST(Dyck, BijectionsOntoAvoiders) {
  for (std::size_t n = 0; n <= 9; ++n) {
    std::set<Permutation> img321, img132;
    for (const auto& p : all_dyck_paths(n)) {
      const auto a = dyck_to_321(p);
      const auto b = dyck_to_132(p);
      ASSERT_TRUE(avoids(a, Pattern3::p321)) << p.to_string();
      ASSERT_TRUE(avoids(b, Pattern3::p132)) << p.to_string();
      img321.insert(a);
      img132.insert(b);
    }
    const auto want321 = enumerate_avoiders(n, Pattern3::p321);
    const auto want132 = enumerate_avoiders(n, Pattern3::p132);
    EXPECT_EQ(img321, std::set<Permutation>(want321.begin(), want321.end())) << n;
    EXPECT_EQ(img132, std::set<Permutation>(want132.begin(), want132.end())) << n;
  }
}

TEST(Dyck, BijectionSmallCases) {
  EXPECT_EQ(dyck_to_321(DyckPath::parse("UDUD")), Permutation::parse("12"));
  EXPECT_EQ(dyck_to_321(DyckPath::parse("UUDD")), Permutation::parse("21"));
  EXPECT_EQ(dyck_to_321(DyckPath::parse("UUDUDD")), Permutation::parse("231"));
  EXPECT_EQ(dyck_to_132(DyckPath::parse("UDUD")), Permutation::parse("21"));
  EXPECT_EQ(dyck_to_132(DyckPath::parse("UUDD")), Permutation::parse("12"));
}

TEST(UniformAvoider, OutputsAvoidAndRefusals) {
  RandomSource r(3);
  for (auto tau : {Pattern3::p321, Pattern3::p132, Pattern3::p213, Pattern3::p123}) {
    for (std::size_t n : {1u, 2u, 5u, 17u, 60u}) {
      for (int i = 0; i < 40; ++i) ASSERT_TRUE(avoids(uniform_avoider(n, tau, r), tau));
    }
  }
  EXPECT_THROW(uniform_avoider(5, Pattern3::p231, r), Refusal);
  EXPECT_THROW(uniform_avoider(5, Pattern3::p312, r), Refusal);
}

TEST(UniformAvoider, UniformAtSmallN) {
  RandomSource r(4);
  for (auto tau : {Pattern3::p321, Pattern3::p132, Pattern3::p213, Pattern3::p123}) {
    for (std::size_t n : {3u, 4u}) {
      const auto all = enumerate_avoiders(n, tau);
      std::map<Permutation, std::size_t> hist;
      const std::size_t N = 100000;
      for (std::size_t i = 0; i < N; ++i) ++hist[uniform_avoider(n, tau, r)];
      ASSERT_EQ(hist.size(), all.size());
      for (const auto& s : all) expect_binomial_band(hist[s], N, 1.0 / all.size(), 4, to_string(tau) + " " + s.to_string());
    }
  }
}

TEST(UniformAvoider, MeanAtModerateN) {
  const std::size_t n = 500;
  const double exact = moment(fp_pmf({n, 1, Pattern3::p321}, PmfMode::exact), 1, MomentKind::raw);
  const auto mc = monte_carlo_fp_pmf(n, Pattern3::p321, 100000, RandomSource(5));
  EXPECT_NEAR(moment(mc, 1, MomentKind::raw), exact, 0.05);
}

TEST(MonteCarloPmf, SmallCaseAndSupport) {
  const auto p = monte_carlo_fp_pmf(3, Pattern3::p321, 100000, RandomSource(6));
  const double want[] = {0.4, 0.4, 0.0, 0.2};
  for (std::size_t k = 0; k <= 3; ++k) EXPECT_NEAR(p.probability(k), want[k], 0.01);
  const auto q = monte_carlo_fp_pmf(40, Pattern3::p123, 20000, RandomSource(7));
  for (std::size_t k = 3; k <= 40; ++k) EXPECT_EQ(q.probability(k), 0.0);
}

TEST(MonteCarloPmf, IndependentOfThreadCount) {
  const RandomSource r(8, 2);
  const auto a = monte_carlo_fp_pmf(30, Pattern3::p132, 100000, r, 1);
  const auto b = monte_carlo_fp_pmf(30, Pattern3::p132, 100000, r, 3);
  EXPECT_EQ(a.probabilities(), b.probabilities());
  EXPECT_EQ(a.monte_carlo()->samples, 100000u);
  EXPECT_THROW(monte_carlo_fp_pmf(5, Pattern3::p231, 10, r), Refusal);
}

TEST(Unrestricted, TrivialAndDegenerateCases) {
  RandomSource r(9);
  EXPECT_EQ(sample_biased_unrestricted(1, 3, r), Permutation::parse("1"));
  UnrestrictedSampler s(4, 1000000);
  std::size_t id = 0;
  const std::size_t N = 100000;
  for (std::size_t i = 0; i < N; ++i) id += s(r) == Permutation::identity(4);
  EXPECT_GT(id, 0.99 * N);
}

TEST(Unrestricted, FixedPointLawAtN6) {
  RandomSource r(10);
  UnrestrictedSampler s(6, 1);
  const std::size_t N = 1000000;
  std::vector<double> hist(7, 0);
  for (std::size_t i = 0; i < N; ++i) hist[fixed_points(s(r))] += 1.0 / N;
  const auto emp = FixedPointPMF::from_float({6, 1, std::nullopt}, hist, Provenance::monte_carlo);
  const auto exact = fp_pmf({6, 1, std::nullopt}, PmfMode::exact).probabilities();
  double tv = 0;
  for (std::size_t k = 0; k <= 6; ++k) tv += std::fabs(hist[k] - exact[k]) / 2;
  EXPECT_LT(tv, 0.005);
}

TEST(FixedPointCount, Examples) {
  RandomSource r(11);
  FixedPointCountSampler s({3, 2, Pattern3::p321}, PmfMode::exact);
  const std::size_t N = 100000;
  std::size_t three = 0;
  for (std::size_t i = 0; i < N; ++i) three += s(r) == 3;
  expect_binomial_band(three, N, 8.0 / 14, 4, "P(K=3)");
  EXPECT_EQ(s.pmf().exact_weights()[0], Rational(1, 7));
  // P(K=0) = 1/(1+q^2) at n=2.
  FixedPointCountSampler small({2, Rational(1, 100), Pattern3::p132}, PmfMode::exact);
  EXPECT_EQ(small.pmf().exact_weights()[0], Rational(10000, 10001));
  EXPECT_THROW(FixedPointCountSampler({3, 2, Pattern3::p123}, PmfMode::exact), Refusal);
}

TEST(FixedPointCount, MeanAtLargeN) {
  RandomSource r(12);
  const std::size_t n = 1000;
  FixedPointCountSampler s({n, 4, Pattern3::p321}, PmfMode::scaled_float);
  const double exact = series_factorial_moments(4, n, 1)[0].get_d();
  double sum = 0;
  const std::size_t N = 100000;
  for (std::size_t i = 0; i < N; ++i) sum += static_cast<double>(s(r));
  EXPECT_NEAR(sum / N, exact, 0.01 * exact);
}

TEST(BiasedAvoider, RoutesAndRefusals) {
  EXPECT_EQ(BiasedAvoiderSampler(30, Rational(1, 2), Pattern3::p321).route(), BiasedAvoiderSampler::Route::rejection);
  EXPECT_EQ(BiasedAvoiderSampler(8, 2, Pattern3::p321).route(), BiasedAvoiderSampler::Route::enumeration);
  EXPECT_EQ(BiasedAvoiderSampler(8, Rational(1, 2), Pattern3::p231).route(), BiasedAvoiderSampler::Route::enumeration);
  EXPECT_THROW(BiasedAvoiderSampler(20, 4, Pattern3::p321), Refusal);
  EXPECT_THROW(BiasedAvoiderSampler(13, Rational(1, 2), Pattern3::p312), Refusal);
}

TEST(BiasedAvoider, QEqualOneAcceptsImmediately) {
  RandomSource r(13);
  BiasedAvoiderSampler s(25, 1, Pattern3::p132);
  for (int i = 0; i < 200; ++i) EXPECT_EQ(s(r).attempts, 1u);
}

TEST(BiasedAvoider, OutcomeProbabilitiesAtN3) {
  // Weights 1/8, 1/2, 1/2, 1, 1 for 123, 132, 213, 231, 312.
  RandomSource r(14);
  BiasedAvoiderSampler s(3, Rational(1, 2), Pattern3::p321);
  const std::map<std::string, double> w{{"1 2 3", 0.125}, {"1 3 2", 0.5}, {"2 1 3", 0.5}, {"2 3 1", 1}, {"3 1 2", 1}};
  const double total = 3.125;
  std::map<std::string, std::size_t> hist;
  const std::size_t N = 200000;
  for (std::size_t i = 0; i < N; ++i) ++hist[s(r).permutation.to_string()];
  ASSERT_EQ(hist.size(), 5u);
  for (const auto& [p, x] : w) expect_binomial_band(hist[p], N, x / total, 4, p);
}

TEST(BiasedAvoider, EnumerationRouteMatchesExactPmf) {
  RandomSource r(15);
  BiasedAvoiderSampler s(10, 2, Pattern3::p231);
  const auto exact = fp_pmf({10, 2, Pattern3::p231}, PmfMode::exact).probabilities();
  std::vector<double> hist(11, 0);
  const std::size_t N = 100000;
  for (std::size_t i = 0; i < N; ++i) hist[fixed_points(s(r).permutation)] += 1.0 / N;
  double tv = 0;
  for (std::size_t k = 0; k <= 10; ++k) tv += std::fabs(hist[k] - exact[k]) / 2;
  EXPECT_LT(tv, 0.01);
}

TEST(BiasedAvoider, AttemptAccounting) {
  // Attempts per draw are geometric with mean Catalan(8)/Z_8(1/2).
  RandomSource r(16);
  const Rational q(1, 2);
  BiasedAvoiderSampler s(8, q, Pattern3::p321);
  const double p = Rational(g_series_eval(q, 8).rationals()[8] / 1430).get_d();
  std::size_t attempts = 0, draws = 0;
  while (attempts < 10000) {
    attempts += s(r).attempts;
    ++draws;
  }
  // Draws in 10^4 attempts are approximately Binomial(10^4, p).
  expect_binomial_band(draws, attempts, p, 3, "accepted draws");
}
