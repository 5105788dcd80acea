#include "fpbl/pmf.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fpbl/errors.hpp"
#include "fpbl/random.hpp"
#include "fpbl/samplers.hpp"

namespace fpbl {

namespace {

std::string tau_text(const std::optional<Pattern3>& tau) { return tau ? to_string(*tau) : std::string("none"); }

std::vector<Rational> normalise(std::vector<Rational> w) {
  Rational total = 0;
  for (const auto& x : w) total += x;
  if (sgn(total) == 0) throw std::logic_error("pmf weights sum to zero");
  for (auto& x : w) x /= total;
  return w;
}

std::vector<double> normalise(std::vector<double> w) {
  // Compensated sum so that the result sums to 1 well inside 1e-12.
  long double total = 0;
  for (double x : w) total += x;
  if (!(total > 0)) throw std::logic_error("pmf weights sum to zero");
  for (auto& x : w) x = static_cast<double>(x / total);
  return w;
}

FixedPointPMF series_exact(const MeasureSpec& spec, const PmfOptions& options) {
  if (spec.n > options.budgets.exact_poly) {
    throw Refusal("exact pmf for tau=" + to_string(*spec.tau) + " needs n <= " +
                  std::to_string(options.budgets.exact_poly) +
                  " (exact-poly budget); use --mode scaled-float or raise FPBL_BUDGET poly=");
  }
  auto table = g_series_poly(spec.n, options.budgets);
  const auto& coeffs = table.polynomials()[spec.n].coeffs();
  std::vector<BigInt> counts(coeffs.begin(), coeffs.end());
  counts.resize(spec.n + 1);
  return pmf_from_counts(spec, counts, Provenance::series);
}

FixedPointPMF series_float(const MeasureSpec& spec, const PmfOptions& options) {
  const double q = to_double(spec.q);
  if (!(q > 0) || !std::isfinite(q)) throw Refusal("scaled-float pmf: q=" + to_string(spec.q) + " is not representable");
  auto table = weighted_columns(q, 1.0 / growth_rate(q), spec.n, spec.n, options.budgets);
  auto row = table.row(spec.n);
  row.resize(spec.n + 1, 0.0);
  return FixedPointPMF::from_float(spec, normalise(std::move(row)), Provenance::series);
}

FixedPointPMF unrestricted_exact(const MeasureSpec& spec, const PmfOptions& options) {
  if (spec.n > options.budgets.exact_eval) {
    throw Refusal("exact unrestricted pmf needs n <= " + std::to_string(options.budgets.exact_eval) +
                  " (exact-eval budget)");
  }
  auto w = unrestricted_weights(spec.q, spec.n);
  std::vector<Rational> r(w.begin(), w.end());
  return FixedPointPMF::from_exact(spec, normalise(std::move(r)), Provenance::series);
}

FixedPointPMF enumeration_exact(const MeasureSpec& spec, const PmfOptions& options) {
  const std::size_t cap = spec.tau ? options.limits.avoider_cap : options.limits.unrestricted_cap;
  if (spec.n > cap) {
    std::string alt = *spec.tau == Pattern3::p123 ? "use --mode monte-carlo" : "no other method is available for this class";
    throw Refusal("exact pmf for tau=" + to_string(*spec.tau) + " is enumeration-backed and needs n <= " +
                  std::to_string(cap) + "; " + alt);
  }
  auto c = fixed_point_counts(spec.n, spec.tau, options.limits);
  std::vector<BigInt> counts;
  counts.reserve(c.size());
  for (auto x : c) counts.emplace_back(static_cast<unsigned long>(x));
  return pmf_from_counts(spec, counts, Provenance::enumeration);
}

FixedPointPMF monte_carlo(const MeasureSpec& spec, const PmfOptions& options) {
  if (options.samples == 0) throw std::invalid_argument("monte-carlo pmf needs at least one sample");
  RandomSource rng(options.seed, options.stream_id);
  if (!spec.tau) {
    auto sampler = UnrestrictedSampler(spec.n, spec.q);
    std::vector<double> hist(spec.n + 1, 0.0);
    for (std::size_t i = 0; i < options.samples; ++i) hist[sampler.sample_fp(rng)] += 1.0;
    for (auto& h : hist) h /= static_cast<double>(options.samples);
    return FixedPointPMF::from_float(spec, std::move(hist), Provenance::monte_carlo,
                                     MonteCarloInfo{options.seed, options.stream_id, options.samples});
  }
  if (*spec.tau == Pattern3::p231 || *spec.tau == Pattern3::p312) {
    throw Refusal("monte-carlo pmf is unavailable for tau=" + to_string(*spec.tau) +
                  " (no uniform sampler); use --mode exact with n <= " + std::to_string(options.limits.avoider_cap));
  }
  auto uniform = monte_carlo_fp_pmf(spec.n, *spec.tau, options.samples, rng);
  if (spec.q == 1) return uniform;
  return reweight(uniform, spec.q);
}

}  // namespace

void MeasureSpec::validate() const {
  if (sgn(q) <= 0) throw std::invalid_argument("q must be positive, got " + to_string(q));
}

std::string MeasureSpec::describe() const {
  return "n=" + std::to_string(n) + " q=" + to_string(q) + " tau=" + tau_text(tau);
}

bool has_series(Pattern3 tau) noexcept {
  return tau == Pattern3::p132 || tau == Pattern3::p321 || tau == Pattern3::p213;
}

std::string to_string(PmfMode mode) {
  switch (mode) {
    case PmfMode::exact: return "exact";
    case PmfMode::scaled_float: return "scaled-float";
    case PmfMode::monte_carlo: return "monte-carlo";
  }
  return "?";
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::series: return "series";
    case Provenance::enumeration: return "enumeration";
    case Provenance::monte_carlo: return "monte-carlo";
  }
  return "?";
}

PmfMode parse_pmf_mode(const std::string& text) {
  if (text == "exact" || text == "eval") return PmfMode::exact;
  if (text == "scaled-float") return PmfMode::scaled_float;
  if (text == "monte-carlo") return PmfMode::monte_carlo;
  throw std::invalid_argument("unknown mode '" + text + "' (expected exact, eval, scaled-float, monte-carlo)");
}

FixedPointPMF FixedPointPMF::from_exact(MeasureSpec spec, std::vector<Rational> weights, Provenance provenance) {
  if (weights.size() != spec.n + 1) throw std::invalid_argument("pmf needs n+1 weights");
  FixedPointPMF p;
  p.spec_ = std::move(spec);
  p.weights_ = std::move(weights);
  p.provenance_ = provenance;
  return p;
}

FixedPointPMF FixedPointPMF::from_float(MeasureSpec spec, std::vector<double> weights, Provenance provenance,
                                        std::optional<MonteCarloInfo> mc) {
  if (weights.size() != spec.n + 1) throw std::invalid_argument("pmf needs n+1 weights");
  FixedPointPMF p;
  p.spec_ = std::move(spec);
  p.weights_ = std::move(weights);
  p.provenance_ = provenance;
  p.mc_ = mc;
  return p;
}

const std::vector<Rational>& FixedPointPMF::exact_weights() const {
  if (!is_exact()) throw std::logic_error("exact_weights on a float pmf");
  return std::get<std::vector<Rational>>(weights_);
}

std::vector<double> FixedPointPMF::probabilities() const {
  if (!is_exact()) return std::get<std::vector<double>>(weights_);
  const auto& w = std::get<std::vector<Rational>>(weights_);
  std::vector<double> out;
  out.reserve(w.size());
  for (const auto& x : w) out.push_back(x.get_d());
  return out;
}

double FixedPointPMF::probability(std::size_t k) const {
  if (k > spec_.n) return 0.0;
  if (is_exact()) return std::get<std::vector<Rational>>(weights_)[k].get_d();
  return std::get<std::vector<double>>(weights_)[k];
}

FixedPointPMF pmf_from_counts(const MeasureSpec& spec, const std::vector<BigInt>& counts, Provenance provenance) {
  spec.validate();
  if (counts.size() != spec.n + 1) throw std::invalid_argument("pmf_from_counts needs n+1 counts");
  // a_k q^k scaled by b^n: a_k a^k b^(n-k), all integers.
  const BigInt& a = spec.q.get_num();
  const BigInt& b = spec.q.get_den();
  std::vector<BigInt> w(spec.n + 1);
  BigInt apow = 1;
  for (std::size_t k = 0; k <= spec.n; ++k) {
    w[k] = counts[k] * apow;
    apow *= a;
  }
  BigInt bpow = 1;
  for (std::size_t k = spec.n + 1; k-- > 0;) {
    w[k] *= bpow;
    bpow *= b;
  }
  BigInt total = std::accumulate(w.begin(), w.end(), BigInt(0));
  if (total == 0) throw std::logic_error("pmf_from_counts: all counts are zero");
  std::vector<Rational> r;
  r.reserve(w.size());
  for (auto& x : w) {
    Rational v(x, total);
    v.canonicalize();
    r.push_back(std::move(v));
  }
  return FixedPointPMF::from_exact(spec, std::move(r), provenance);
}

FixedPointPMF reweight(const FixedPointPMF& pmf, const Rational& q) {
  if (sgn(q) <= 0) throw std::invalid_argument("reweight: q must be positive");
  MeasureSpec spec = pmf.spec();
  spec.q *= q;
  if (pmf.is_exact()) {
    std::vector<Rational> w = pmf.exact_weights();
    Rational qk = 1;
    for (auto& x : w) {
      x *= qk;
      qk *= q;
    }
    return FixedPointPMF::from_exact(spec, normalise(std::move(w)), pmf.provenance());
  }
  // Work relative to the largest tilt so that large q^k never overflows.
  const double lq = std::log(q.get_d());
  auto p = pmf.probabilities();
  double top = -INFINITY;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] > 0) top = std::max(top, static_cast<double>(k) * lq);
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = p[k] > 0 ? p[k] * std::exp(static_cast<double>(k) * lq - top) : 0.0;
  return FixedPointPMF::from_float(spec, normalise(std::move(p)), pmf.provenance(), pmf.monte_carlo());
}

FixedPointPMF fp_pmf(const MeasureSpec& spec, PmfMode mode, const PmfOptions& options) {
  spec.validate();
  switch (mode) {
    case PmfMode::exact:
      if (!spec.tau) return unrestricted_exact(spec, options);
      if (has_series(*spec.tau)) return series_exact(spec, options);
      return enumeration_exact(spec, options);
    case PmfMode::scaled_float:
      if (!spec.tau) {
        auto exact = unrestricted_exact(spec, options);
        return FixedPointPMF::from_float(spec, exact.probabilities(), Provenance::series);
      }
      if (has_series(*spec.tau)) return series_float(spec, options);
      throw Refusal("scaled-float pmf is only available for tau in {132,321,213} or without a pattern; tau=" +
                    to_string(*spec.tau) + " supports --mode exact (n <= " + std::to_string(options.limits.avoider_cap) +
                    ")" + (*spec.tau == Pattern3::p123 ? " or --mode monte-carlo" : ""));
    case PmfMode::monte_carlo:
      return monte_carlo(spec, options);
  }
  throw std::logic_error("unreachable");
}

}  // namespace fpbl
