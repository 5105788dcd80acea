#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fpbl/arith.hpp"
#include "fpbl/dyck.hpp"
#include "fpbl/enumerate.hpp"
#include "fpbl/permutation.hpp"
#include "fpbl/pmf.hpp"
#include "fpbl/random.hpp"

namespace fpbl {

/// Exact inverse-cdf sampling from nonnegative integer weights.
class IntegerWeightSampler {
 public:
  explicit IntegerWeightSampler(const std::vector<BigInt>& weights);
  std::size_t operator()(RandomSource& rng) const;
  const BigInt& total() const noexcept { return cumulative_.back(); }

 private:
  std::vector<BigInt> cumulative_;
};

/// Exact sampler for P_n^q on S_n: K ~ binom(n,k) D_{n-k} q^k / Z_n(q), a
/// uniform k-subset of fixed points, and a uniform derangement of the rest
/// obtained by reshuffling until no point is fixed.
class UnrestrictedSampler {
 public:
  UnrestrictedSampler(std::size_t n, const Rational& q);
  Permutation operator()(RandomSource& rng) const;
  std::size_t sample_fp(RandomSource& rng) const { return k_(rng); }

 private:
  std::size_t n_;
  IntegerWeightSampler k_;
};

Permutation sample_biased_unrestricted(std::size_t n, const Rational& q, RandomSource& rng);

/// Uniform over S_n(tau) for tau in {321, 132, 213, 123}; refuses 231 and 312.
Permutation uniform_avoider(std::size_t n, Pattern3 tau, RandomSource& rng);

/// Draws fp(Pi) under P_n^{q,tau} by inverse cdf over the pmf, exact or
/// scaled-float.
class FixedPointCountSampler {
 public:
  FixedPointCountSampler(const MeasureSpec& spec, PmfMode mode, const PmfOptions& options = {});
  std::size_t operator()(RandomSource& rng) const;
  const FixedPointPMF& pmf() const noexcept { return pmf_; }

 private:
  FixedPointPMF pmf_;
  std::optional<IntegerWeightSampler> exact_;
  std::vector<double> cdf_;
};

std::size_t sample_fp_count(std::size_t n, const Rational& q, Pattern3 tau, RandomSource& rng,
                            PmfMode mode = PmfMode::exact);

struct BiasedDraw {
  Permutation permutation;
  std::size_t attempts = 1;  ///< uniform proposals used (1 on the enumeration route)
};

/// Whole-permutation sampler for P_n^{q,tau}.
///
/// With q <= 1 and tau in {321, 132, 213, 123} a uniform avoider is accepted
/// with probability q^fp (exact Bernoulli); expected attempts are
/// Catalan(n)/Z_n(q,tau). Otherwise, for n within the enumeration cap, all
/// avoiders are weighted by q^fp and drawn by inverse cdf. Anything else is
/// refused.
class BiasedAvoiderSampler {
 public:
  enum class Route { rejection, enumeration };

  BiasedAvoiderSampler(std::size_t n, const Rational& q, Pattern3 tau, EnumerationLimits limits = {});
  BiasedDraw operator()(RandomSource& rng) const;
  Route route() const noexcept { return route_; }

 private:
  std::size_t n_;
  Rational q_;
  Pattern3 tau_;
  Route route_;
  std::vector<Rational> accept_;  // q^k, rejection route
  std::vector<Permutation> table_;
  std::optional<IntegerWeightSampler> pick_;
};

BiasedDraw biased_avoider_permutation(std::size_t n, const Rational& q, Pattern3 tau, RandomSource& rng);

/// Empirical fp law of `samples` uniform tau-avoiders. Work is split into
/// fixed-size chunks, chunk c drawing from rng.substream(c), so the result is
/// independent of the number of worker threads.
FixedPointPMF monte_carlo_fp_pmf(std::size_t n, Pattern3 tau, std::size_t samples, const RandomSource& rng,
                                 unsigned threads = 0);

}  // namespace fpbl
