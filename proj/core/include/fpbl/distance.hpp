#pragma once

#include <cstddef>
#include <vector>

#include "fpbl/arith.hpp"
#include "fpbl/pmf.hpp"
#include "fpbl/reference_law.hpp"
#include "fpbl/series.hpp"

namespace fpbl {

/// 1/2 sum_k |pmf(k) - law(k)| with the law's mass beyond n added in full.
///
/// Exact pmfs against Bernoulli-sum or negative-binomial laws are computed in
/// rationals; against Poisson in MPFR at a precision chosen so that the
/// result keeps full relative accuracy even when it is far below double
/// range (the return type is long double for that reason). Refuses
/// continuous laws.
long double tv_distance(const FixedPointPMF& pmf, const ReferenceLaw& law);

/// max over k of |F_pmf - F_law((x - center)/scale)| taken on both sides of
/// every jump at x = k, without continuity correction.
double kolmogorov_distance(const FixedPointPMF& pmf, const ReferenceLaw& law, double center, double scale);

enum class MomentKind { raw, factorial };

/// sum_k k^m pmf(k) or sum_k (k)_m pmf(k). Throws on float pmfs.
Rational exact_moment(const FixedPointPMF& pmf, unsigned m, MomentKind kind);
double moment(const FixedPointPMF& pmf, unsigned m, MomentKind kind);

/// E[(X_n)_m] under P_n^{q,tau}, tau in {132,321,213}, for m = 1..m_max,
/// computed as [z^n]G_m(z,q) / Z_n(q,tau) without building the pmf.
std::vector<Rational> series_factorial_moments(const Rational& q, std::size_t n, unsigned m_max,
                                               const SeriesBudgets& budgets = SeriesBudgets::from_environment());

struct MeanVariance {
  Rational mean;
  Rational variance;
};
MeanVariance series_mean_variance(const Rational& q, std::size_t n,
                                  const SeriesBudgets& budgets = SeriesBudgets::from_environment());

}  // namespace fpbl
