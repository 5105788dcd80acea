#include "fpbl/distance.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fpbl/combinatorics.hpp"
#include "fpbl/errors.hpp"

namespace fpbl {

namespace {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

long double to_long_double(const Rational& r) {
  Mpfr x(128);
  mpfr_set_q(x.get(), r.get_mpq_t(), MPFR_RNDN);
  return mpfr_get_ld(x.get(), MPFR_RNDN);
}

// Exact TV against a law with rational pmf.
long double tv_rational(const std::vector<Rational>& p, const ReferenceLaw& law) {
  Rational sum = 0, covered = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const Rational l = *law.exact_pmf(static_cast<long>(k));
    covered += l;
    sum += abs(p[k] - l);
  }
  sum += 1 - covered;
  return to_long_double(sum / 2);
}

long double tv_poisson_exact(const std::vector<Rational>& p, const Rational& lambda) {
  const double n = static_cast<double>(p.size() - 1);
  const double lam = lambda.get_d();
  // The tail beyond n alone is about e^-lam lam^(n+1)/(n+1)!, and TV is at
  // least half of it; enough bits to resolve that below 1 - sum.
  const double tail_bits = (std::lgamma(n + 2.0) - (n + 1.0) * std::log(lam) + lam) / std::log(2.0);
  const auto prec = static_cast<mpfr_prec_t>(128 + std::max(0.0, std::ceil(tail_bits)));
  Mpfr term(prec), lam_f(prec), sum(prec), covered(prec), tmp(prec), pk(prec);
  mpfr_set_q(lam_f.get(), lambda.get_mpq_t(), MPFR_RNDN);
  mpfr_neg(term.get(), lam_f.get(), MPFR_RNDN);
  mpfr_exp(term.get(), term.get(), MPFR_RNDN);
  mpfr_set_zero(sum.get(), 1);
  mpfr_set_zero(covered.get(), 1);
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k > 0) {
      mpfr_mul(term.get(), term.get(), lam_f.get(), MPFR_RNDN);
      mpfr_div_ui(term.get(), term.get(), k, MPFR_RNDN);
    }
    mpfr_add(covered.get(), covered.get(), term.get(), MPFR_RNDN);
    mpfr_set_q(pk.get(), p[k].get_mpq_t(), MPFR_RNDN);
    mpfr_sub(tmp.get(), pk.get(), term.get(), MPFR_RNDN);
    mpfr_abs(tmp.get(), tmp.get(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), tmp.get(), MPFR_RNDN);
  }
  mpfr_ui_sub(tmp.get(), 1, covered.get(), MPFR_RNDN);
  mpfr_add(sum.get(), sum.get(), tmp.get(), MPFR_RNDN);
  mpfr_div_ui(sum.get(), sum.get(), 2, MPFR_RNDN);
  return mpfr_get_ld(sum.get(), MPFR_RNDN);
}

}  // namespace

long double tv_distance(const FixedPointPMF& pmf, const ReferenceLaw& law) {
  if (!law.discrete()) {
    throw Refusal("tv_distance needs a discrete law; use kolmogorov_distance for " + law.name());
  }
  if (pmf.is_exact()) {
    const auto& p = pmf.exact_weights();
    if (const auto* poisson = std::get_if<ReferenceLaw::Poisson>(&law.variant())) {
      return tv_poisson_exact(p, poisson->lambda);
    }
    return tv_rational(p, law);
  }
  const auto p = pmf.probabilities();
  long double sum = 0, covered = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const long double l = law.pmf(static_cast<long>(k));
    covered += l;
    sum += std::fabs(static_cast<long double>(p[k]) - l);
  }
  sum += std::max(0.0L, 1.0L - covered);
  return sum / 2;
}

double kolmogorov_distance(const FixedPointPMF& pmf, const ReferenceLaw& law, double center, double scale) {
  if (!(scale > 0)) throw std::invalid_argument("kolmogorov_distance: scale must be positive");
  const auto p = pmf.probabilities();
  double worst = 0;
  long double below = 0;  // F_pmf just left of k
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double f = law.cdf((static_cast<double>(k) - center) / scale);
    worst = std::max(worst, std::fabs(static_cast<double>(below) - f));
    below += p[k];
    worst = std::max(worst, std::fabs(static_cast<double>(below) - f));
  }
  return worst;
}

Rational exact_moment(const FixedPointPMF& pmf, unsigned m, MomentKind kind) {
  if (m < 1) throw std::invalid_argument("moment order must be >= 1");
  const auto& w = pmf.exact_weights();
  Rational sum = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (sgn(w[k]) == 0) continue;
    const BigInt f = kind == MomentKind::raw ? pow(BigInt(static_cast<unsigned long>(k)), m)
                                             : falling_factorial(static_cast<long>(k), m);
    sum += w[k] * f;
  }
  return sum;
}

double moment(const FixedPointPMF& pmf, unsigned m, MomentKind kind) {
  if (pmf.is_exact()) return exact_moment(pmf, m, kind).get_d();
  if (m < 1) throw std::invalid_argument("moment order must be >= 1");
  const auto p = pmf.probabilities();
  long double sum = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    long double f = 1;
    for (unsigned i = 0; i < m; ++i) f *= kind == MomentKind::raw ? k : static_cast<long double>(k) - i;
    sum += f * p[k];
  }
  return static_cast<double>(sum);
}

std::vector<Rational> series_factorial_moments(const Rational& q, std::size_t n, unsigned m_max,
                                               const SeriesBudgets& budgets) {
  const auto z = g_series_scaled(q, n, budgets);
  std::vector<Rational> out;
  for (unsigned m = 1; m <= m_max; ++m) {
    const auto gm = factorial_moment_scaled(m, q, n, budgets);
    // Both numerators are scaled by b^n.
    Rational r(gm.numerators[n], z.numerators[n]);
    r.canonicalize();
    out.push_back(std::move(r));
  }
  return out;
}

MeanVariance series_mean_variance(const Rational& q, std::size_t n, const SeriesBudgets& budgets) {
  const auto f = series_factorial_moments(q, n, 2, budgets);
  return {f[0], f[1] + f[0] - f[0] * f[0]};
}

}  // namespace fpbl
