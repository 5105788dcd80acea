#include "fpbl/samplers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "fpbl/errors.hpp"
#include "fpbl/series.hpp"

namespace fpbl {

namespace {

constexpr std::size_t kChunk = 1 << 15;

bool has_uniform_sampler(Pattern3 tau) { return tau != Pattern3::p231 && tau != Pattern3::p312; }

template <class T>
void shuffle(std::vector<T>& v, RandomSource& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

}  // namespace

IntegerWeightSampler::IntegerWeightSampler(const std::vector<BigInt>& weights) {
  if (weights.empty()) throw std::invalid_argument("IntegerWeightSampler: no weights");
  cumulative_.reserve(weights.size());
  BigInt acc = 0;
  for (const auto& w : weights) {
    if (sgn(w) < 0) throw std::invalid_argument("IntegerWeightSampler: negative weight");
    acc += w;
    cumulative_.push_back(acc);
  }
  if (sgn(acc) == 0) throw std::invalid_argument("IntegerWeightSampler: weights sum to zero");
}

std::size_t IntegerWeightSampler::operator()(RandomSource& rng) const {
  const BigInt u = rng.below(total());
  return static_cast<std::size_t>(std::upper_bound(cumulative_.begin(), cumulative_.end(), u) - cumulative_.begin());
}

UnrestrictedSampler::UnrestrictedSampler(std::size_t n, const Rational& q)
    : n_(n), k_(unrestricted_weights(q, n)) {
  if (n < 1) throw std::invalid_argument("sample_biased_unrestricted: n must be >= 1");
}

Permutation UnrestrictedSampler::operator()(RandomSource& rng) const {
  const std::size_t k = k_(rng);
  std::vector<Permutation::value_type> pos(n_);
  std::iota(pos.begin(), pos.end(), 1u);
  // Partial Fisher-Yates: pos[0..k) become the fixed points.
  for (std::size_t i = 0; i < k; ++i) std::swap(pos[i], pos[i + rng.below(n_ - i)]);
  std::vector<Permutation::value_type> rest(pos.begin() + static_cast<std::ptrdiff_t>(k), pos.end());
  std::sort(rest.begin(), rest.end());
  std::vector<Permutation::value_type> image = rest;
  for (;;) {
    shuffle(image, rng);
    bool deranged = true;
    for (std::size_t i = 0; i < rest.size() && deranged; ++i) deranged = image[i] != rest[i];
    if (deranged) break;
  }
  std::vector<Permutation::value_type> out(n_);
  for (std::size_t i = 0; i < k; ++i) out[pos[i] - 1] = pos[i];
  for (std::size_t i = 0; i < rest.size(); ++i) out[rest[i] - 1] = image[i];
  return make_unchecked(std::move(out));
}

Permutation sample_biased_unrestricted(std::size_t n, const Rational& q, RandomSource& rng) {
  return UnrestrictedSampler(n, q)(rng);
}

Permutation uniform_avoider(std::size_t n, Pattern3 tau, RandomSource& rng) {
  if (n < 1) throw std::invalid_argument("uniform_avoider: n must be >= 1");
  switch (tau) {
    case Pattern3::p321: return dyck_to_321(uniform_dyck(n, rng));
    case Pattern3::p132: return dyck_to_132(uniform_dyck(n, rng));
    case Pattern3::p213: return apply(dyck_to_132(uniform_dyck(n, rng)), Symmetry::reverse_complement);
    case Pattern3::p123: return apply(dyck_to_321(uniform_dyck(n, rng)), Symmetry::reverse);
    default:
      throw Refusal("uniform_avoider: no uniform sampler for tau=" + to_string(tau) +
                    "; only enumeration (n <= 12) is available for this class");
  }
}

FixedPointCountSampler::FixedPointCountSampler(const MeasureSpec& spec, PmfMode mode, const PmfOptions& options)
    : pmf_([&] {
        if (!spec.tau || !has_series(*spec.tau)) {
          throw Refusal("sample_fp_count supports tau in {132,321,213}; got tau=" +
                        (spec.tau ? to_string(*spec.tau) : std::string("none")));
        }
        if (mode == PmfMode::monte_carlo) throw Refusal("sample_fp_count needs an exact or scaled-float pmf");
        return fp_pmf(spec, mode, options);
      }()) {
  if (pmf_.is_exact()) {
    const auto& w = pmf_.exact_weights();
    BigInt l = 1;
    for (const auto& x : w) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<BigInt> ints;
    ints.reserve(w.size());
    for (const auto& x : w) ints.push_back(x.get_num() * (l / x.get_den()));
    exact_.emplace(ints);
  } else {
    auto p = pmf_.probabilities();
    cdf_.resize(p.size());
    std::partial_sum(p.begin(), p.end(), cdf_.begin());
  }
}

std::size_t FixedPointCountSampler::operator()(RandomSource& rng) const {
  if (exact_) return (*exact_)(rng);
  const double u = rng.uniform01() * cdf_.back();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) --it;
  return static_cast<std::size_t>(it - cdf_.begin());
}

std::size_t sample_fp_count(std::size_t n, const Rational& q, Pattern3 tau, RandomSource& rng, PmfMode mode) {
  return FixedPointCountSampler(MeasureSpec{n, q, tau}, mode)(rng);
}

BiasedAvoiderSampler::BiasedAvoiderSampler(std::size_t n, const Rational& q, Pattern3 tau, EnumerationLimits limits)
    : n_(n), q_(q), tau_(tau) {
  if (sgn(q) <= 0) throw std::invalid_argument("q must be positive");
  if (n < 1) throw std::invalid_argument("biased_avoider_permutation: n must be >= 1");
  if (q <= 1 && has_uniform_sampler(tau)) {
    route_ = Route::rejection;
    accept_.resize(n + 1);
    accept_[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) accept_[k] = accept_[k - 1] * q;
    return;
  }
  if (n > limits.avoider_cap) {
    throw Refusal("whole-permutation sampling under P_n^{q,tau} with q=" + to_string(q) + ", tau=" + to_string(tau) +
                  ", n=" + std::to_string(n) +
                  " is unsupported: rejection needs q <= 1 and enumeration needs n <= " +
                  std::to_string(limits.avoider_cap) + "; only fixed-point-count sampling is available");
  }
  route_ = Route::enumeration;
  table_ = enumerate_avoiders(n, tau, limits);
  // q^k scaled by b^n: a^k b^(n-k).
  std::vector<BigInt> per_k(n + 1);
  for (std::size_t k = 0; k <= n; ++k) per_k[k] = pow(q.get_num(), k) * pow(q.get_den(), n - k);
  std::vector<BigInt> w;
  w.reserve(table_.size());
  for (const auto& s : table_) w.push_back(per_k[fixed_points(s)]);
  pick_.emplace(w);
}

BiasedDraw BiasedAvoiderSampler::operator()(RandomSource& rng) const {
  if (route_ == Route::enumeration) return {table_[(*pick_)(rng)], 1};
  std::size_t attempts = 0;
  for (;;) {
    ++attempts;
    Permutation s = uniform_avoider(n_, tau_, rng);
    if (rng.bernoulli(accept_[fixed_points(s)])) return {std::move(s), attempts};
  }
}

BiasedDraw biased_avoider_permutation(std::size_t n, const Rational& q, Pattern3 tau, RandomSource& rng) {
  return BiasedAvoiderSampler(n, q, tau)(rng);
}

FixedPointPMF monte_carlo_fp_pmf(std::size_t n, Pattern3 tau, std::size_t samples, const RandomSource& rng,
                                 unsigned threads) {
  if (!has_uniform_sampler(tau)) {
    throw Refusal("monte_carlo_fp_pmf: tau must be one of 321, 132, 213, 123; got " + to_string(tau));
  }
  if (samples == 0) throw std::invalid_argument("monte_carlo_fp_pmf: samples must be positive");
  const std::size_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::vector<std::uint64_t>> hist(chunks, std::vector<std::uint64_t>(n + 1, 0));
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t c = first; c < chunks; c += stride) {
      RandomSource local = rng.substream(c);
      const std::size_t count = std::min(kChunk, samples - c * kChunk);
      for (std::size_t i = 0; i < count; ++i) ++hist[c][fixed_points(uniform_avoider(n, tau, local))];
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, chunks));
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  std::vector<double> p(n + 1, 0.0);
  for (std::size_t k = 0; k <= n; ++k) {
    std::uint64_t total = 0;
    for (const auto& h : hist) total += h[k];
    p[k] = static_cast<double>(total) / static_cast<double>(samples);
  }
  return FixedPointPMF::from_float(MeasureSpec{n, 1, tau}, std::move(p), Provenance::monte_carlo,
                                   MonteCarloInfo{rng.seed(), rng.stream_id(), samples});
}

}  // namespace fpbl
