// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only
//
// Exit status is 0 iff every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "fpbl/asymptotics.hpp"
#include "fpbl/distance.hpp"
#include "fpbl/enumerate.hpp"
#include "fpbl/pmf.hpp"
#include "fpbl/random.hpp"
#include "fpbl/samplers.hpp"
#include "fpbl/series.hpp"
#include "helpers.hpp"

using namespace fpbl;

namespace {

constexpr std::uint64_t kSeed = 20260401;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  int violations = 0;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (++violations <= 5) detail << " [violated: " << what << "]";
  }
};

const Pattern3 kSeriesPatterns[] = {Pattern3::p132, Pattern3::p321, Pattern3::p213};

// 1. Column coefficients against brute-force enumeration.
void criterion1(Outcome& o) {
  const std::size_t n_max = 10;
  const auto cols = column_series(n_max, n_max, SeriesMode::exact_eval);
  const auto catalan = oracle::catalan(n_max);
  std::size_t mismatches = 0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::vector<std::vector<std::size_t>> per_tau;
    for (Pattern3 tau : kSeriesPatterns) {
      const auto counts = oracle::fp_counts(n, oracle::pattern(tau));
      for (std::size_t k = 0; k <= n; ++k) {
        if (cols.exact_at(k, n) != counts[k]) ++mismatches;
      }
      per_tau.push_back(counts);
    }
    o.check(per_tau[0] == per_tau[1] && per_tau[1] == per_tau[2], "counts equal across patterns at n=" + std::to_string(n));
    BigInt sum = 0;
    for (std::size_t k = 0; k <= n; ++k) sum += cols.exact_at(k, n);
    o.check(sum == catalan[n], "row sum is Catalan at n=" + std::to_string(n));
  }
  o.check(mismatches == 0, std::to_string(mismatches) + " coefficient mismatches");
  o.detail << "n<=10 tau in {132,321,213}: coefficient mismatches=" << mismatches;
}

// 2. Unrestricted closed form against brute force.
void criterion2(Outcome& o) {
  std::size_t checked = 0;
  for (const char* qs : {"1/2", "1", "2", "5"}) {
    const Rational q = parse_rational(qs);
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto brute = oracle::partition_function(n, q);
      o.check(unrestricted_Z(q, n) == brute, std::string("q=") + qs + " n=" + std::to_string(n));
      ++checked;
    }
  }
  o.detail << "n<=8 q in {1/2,1,2,5}: " << checked << " exact comparisons";
}

// 3. Poisson limit for the unrestricted measure.
void criterion3(Outcome& o) {
  const std::vector<std::size_t> grid = {25, 50, 100, 200};
  for (const char* qs : {"1/2", "1", "2"}) {
    const Rational q = parse_rational(qs);
    const auto law = limit_law(1, q).law;
    std::vector<long double> tv;
    for (std::size_t n : grid) tv.push_back(tv_distance(fp_pmf({n, q, std::nullopt}, PmfMode::exact), law));
    o.detail << "q=" << qs << " tv(200)=" << tv.back() << "; ";
    o.check(tv.back() < 0.01, std::string("tv < 0.01 at q=") + qs);
    for (std::size_t i = 1; i < tv.size(); ++i) o.check(tv[i] < tv[i - 1], std::string("tv decreasing at q=") + qs);
  }
}

// 4. Bernoulli-sum limit for 123-avoiders by Monte Carlo.
void criterion4(Outcome& o) {
  const std::size_t n = 1000;
  const RandomSource rng(kSeed, 4);
  const auto mc = monte_carlo_fp_pmf(n, Pattern3::p123, 1000000, rng);
  const double target1[] = {9.0 / 16, 6.0 / 16, 1.0 / 16};
  const double target2[] = {9.0 / 25, 12.0 / 25, 4.0 / 25};
  const auto p1 = mc.probabilities();
  const auto p2 = reweight(mc, 2).probabilities();
  double worst1 = 0, worst2 = 0;
  for (std::size_t k = 0; k < p1.size(); ++k) {
    worst1 = std::max(worst1, std::abs(p1[k] - (k < 3 ? target1[k] : 0.0)));
    worst2 = std::max(worst2, std::abs(p2[k] - (k < 3 ? target2[k] : 0.0)));
  }
  o.detail << "n=1000 samples=1e6 seed=" << kSeed << " p=(" << p1[0] << "," << p1[1] << "," << p1[2]
           << ") max cell error q=1: " << worst1 << " q=2: " << worst2;
  o.check(worst1 <= 0.005, "per-cell error at q=1");
  o.check(worst2 <= 0.005, "per-cell error after reweighting to q=2");
}

// 5. Negative binomial limit at q=2, tau=321.
void criterion5(Outcome& o) {
  const Rational q = 2;
  const auto law = limit_law(3, q).law;
  const std::vector<std::size_t> grid = {100, 200, 500, 1000};
  std::vector<long double> tv;
  for (std::size_t n : grid) tv.push_back(tv_distance(fp_pmf({n, q, Pattern3::p321}, PmfMode::scaled_float), law));
  const auto exact = fp_pmf({200, q, Pattern3::p321}, PmfMode::exact);
  const auto approx = fp_pmf({200, q, Pattern3::p321}, PmfMode::scaled_float);
  double cell_gap = 0;
  for (std::size_t k = 0; k <= 200; ++k) cell_gap = std::max(cell_gap, std::abs(exact.probability(k) - approx.probability(k)));
  const double tv_gap = static_cast<double>(std::abs(tv_distance(exact, law) - tv[1]));
  o.detail << "tv(1000)=" << static_cast<double>(tv.back()) << " exact/float at n=200: max cell gap=" << cell_gap
           << " tv gap=" << tv_gap;
  o.check(tv.back() < 0.01, "tv < 0.01 at n=1000");
  o.check(cell_gap <= 1e-8 && tv_gap <= 1e-8, "exact cross-check at n=200");
  for (std::size_t i = 1; i < tv.size(); ++i) o.check(tv[i] < tv[i - 1], "tv decreasing along the grid");
}

// 6. Rayleigh limit at q=3.
void criterion6(Outcome& o) {
  const auto spec = limit_law(4, 3);
  auto ks = [&](std::size_t n) {
    return kolmogorov_distance(fp_pmf({n, 3, Pattern3::p321}, PmfMode::scaled_float), spec.law, spec.center(n),
                               spec.scale(n));
  };
  const double d250 = ks(250);
  const double d1000 = ks(1000);
  o.detail << "ks(250)=" << d250 << " ks(1000)=" << d1000;
  o.check(d1000 < 0.08, "ks < 0.08 at n=1000");
  o.check(d1000 < d250, "ks smaller at n=1000 than at n=250");
}

// 7. Gaussian limit at q=4.
void criterion7(Outcome& o) {
  const std::size_t n = 2000;
  const auto spec = limit_law(5, 4);
  const double ks =
      kolmogorov_distance(fp_pmf({n, 4, Pattern3::p321}, PmfMode::scaled_float), spec.law, spec.center(n), spec.scale(n));
  const auto mv = series_mean_variance(4, n);
  const double mean_gap = Rational(mv.mean - Rational(2 * n, 3)).get_d();
  const double var_gap = Rational(mv.variance - Rational(10 * n, 9)).get_d();
  o.detail << "ks=" << ks << " mean-(2/3)n=" << mean_gap << " var-(10/9)n=" << var_gap;
  o.check(ks < 0.05, "ks < 0.05");
  o.check(std::abs(mean_gap) <= 5, "mean band");
  o.check(std::abs(var_gap) <= 10, "variance band");
}

// 8. Growth asymptotics of Z_n(q,tau), compared in log space.
void criterion8(Outcome& o) {
  const std::size_t n = 2000;
  for (const auto& [qs, band] : std::vector<std::pair<const char*, double>>{{"2", 0.01}, {"3", 0.05}, {"4", 0.01}}) {
    const Rational q = parse_rational(qs);
    const double log_z = log_partition_function(q, n)[n];
    const double ratio = std::exp(log_z - static_cast<double>(lemma1_predict(q, n)));
    o.detail << "q=" << qs << " ratio=" << ratio << "; ";
    o.check(std::abs(ratio - 1) <= band, std::string("ratio band at q=") + qs);
  }
}

// 9. Factorial moments at q=3 against the Rayleigh moment scaling.
void criterion9(Outcome& o) {
  ConvergenceParams p;
  p.q = 3;
  for (unsigned m = 1; m <= 3; ++m) {
    p.m = m;
    const double ratio = convergence_table(ConvergenceKind::moments, p, {2000}).rows[0].ratio;
    o.detail << (m > 1 ? "; " : "") << "m=" << m << " ratio=" << ratio;
    o.check(ratio >= 0.95 && ratio <= 1.05, "ratio in [0.95,1.05] at m=" + std::to_string(m));
  }
}

// 10. Whole-permutation frequencies within 4 sigma binomial bands.
template <class Draw, class Exact>
void frequency_check(Outcome& o, const std::string& label, std::size_t n, Draw draw, Exact exact, std::uint64_t stream) {
  const std::size_t samples = 1000000;
  RandomSource rng(kSeed, stream);
  using Key = std::vector<Permutation::value_type>;
  auto key = [](const Permutation& p) { return Key(p.entries().begin(), p.entries().end()); };
  std::map<Key, std::size_t> freq;
  for (std::size_t i = 0; i < samples; ++i) ++freq[key(draw(rng))];
  const auto probs = exact(n);
  double worst = 0;
  for (const auto& [perm, p] : probs) {
    const auto it = freq.find(key(perm));
    const double f = it == freq.end() ? 0.0 : static_cast<double>(it->second) / samples;
    const double sigma = std::sqrt(p * (1 - p) / samples);
    const double z = sigma > 0 ? std::abs(f - p) / sigma : (f == p ? 0.0 : INFINITY);
    worst = std::max(worst, z);
  }
  std::size_t stray = 0;
  for (const auto& [entries, count] : freq) {
    if (std::none_of(probs.begin(), probs.end(), [&](const auto& e) { return key(e.first) == entries; })) stray += count;
  }
  o.check(worst <= 4 && stray == 0, label + " n=" + std::to_string(n));
  if (n == 6) o.detail << label << " worst z(n=6)=" << worst << "; ";
}

void criterion10(Outcome& o) {
  auto unrestricted_exact = [](const Rational& q) {
    return [q](std::size_t n) {
      std::vector<std::pair<Permutation, double>> out;
      const Rational z = oracle::partition_function(n, q);
      oracle::for_each_permutation(n, [&](const oracle::Perm& p) {
        const Rational w = pow(q, oracle::fixed_points(p)) / z;
        out.emplace_back(oracle::to_fpbl(p), w.get_d());
      });
      return out;
    };
  };
  std::uint64_t stream = 100;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const char* qs : {"1/2", "2"}) {
      const Rational q = parse_rational(qs);
      const UnrestrictedSampler sampler(n, q);
      frequency_check(o, std::string("unrestricted q=") + qs, n, [&](RandomSource& r) { return sampler(r); },
                      unrestricted_exact(q), stream++);
    }
    const Rational half(1, 2);
    const BiasedAvoiderSampler avoider(n, half, Pattern3::p321);
    frequency_check(
        o, "avoider q=1/2 tau=321", n, [&](RandomSource& r) { return avoider(r).permutation; },
        [&](std::size_t m) {
          std::vector<std::pair<Permutation, double>> out;
          const oracle::Perm tau = oracle::pattern(Pattern3::p321);
          const Rational z = oracle::partition_function(m, half, tau);
          for (const auto& p : oracle::avoiders(m, tau)) {
            out.emplace_back(oracle::to_fpbl(p), Rational(pow(half, oracle::fixed_points(p)) / z).get_d());
          }
          return out;
        },
        stream++);
  }
}

// 11. Reweighting and normalization identities, exact.
void criterion11(Outcome& o) {
  const std::vector<std::optional<Pattern3>> taus = {std::nullopt, Pattern3::p132, Pattern3::p321, Pattern3::p213};
  const std::vector<Rational> qs = {Rational(1, 2), Rational(1), Rational(2), Rational(3), Rational(4), Rational(7, 3)};
  const std::vector<std::size_t> ns = {1, 2, 3, 4, 5, 8, 13, 21, 34, 55, 89, 144, 200};
  std::size_t checked = 0;
  for (const auto& tau : taus) {
    for (std::size_t n : ns) {
      std::vector<FixedPointPMF> pmfs;
      for (const auto& q : qs) pmfs.push_back(fp_pmf({n, q, tau}, PmfMode::exact));
      const auto z_series = tau ? g_series_eval(1, n).rationals()[n] : unrestricted_Z(1, n);
      for (std::size_t i = 0; i < qs.size(); ++i) {
        const auto& w = pmfs[i].exact_weights();
        Rational total = 0;
        for (const auto& x : w) total += x;
        o.check(total == 1, "normalization " + pmfs[i].spec().describe());
        // Z_n(q) = Z_n(1) * E_1[q^fp].
        Rational zq = 0;
        const auto& base = pmfs[1].exact_weights();
        for (std::size_t k = 0; k < base.size(); ++k) zq += base[k] * pow(qs[i], k);
        zq *= z_series;
        const Rational direct = tau ? g_series_eval(qs[i], n).rationals()[n] : unrestricted_Z(qs[i], n);
        o.check(zq == direct, "partition function " + pmfs[i].spec().describe());
        for (std::size_t j = 0; j < qs.size(); ++j) {
          const Rational tilt = qs[j] / qs[i];
          const auto moved = reweight(pmfs[i], tilt);
          o.check(moved.exact_weights() == pmfs[j].exact_weights() && moved.spec().q == qs[j],
                  "reweight " + pmfs[i].spec().describe());
          ++checked;
        }
      }
    }
  }
  o.detail << checked << " reweightings over " << taus.size() * ns.size() * qs.size() << " exact pmfs";
}

const std::map<int, std::function<void(Outcome&)>> kCriteria = {
    {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},   {5, criterion5},   {6, criterion6},
    {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10}, {11, criterion11},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      selected.push_back(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--criterion N]...\n";
      return 2;
    }
  }
  if (selected.empty()) {
    for (const auto& [id, fn] : kCriteria) selected.push_back(id);
  }
  bool all = true;
  for (int id : selected) {
    const auto it = kCriteria.find(id);
    if (it == kCriteria.end()) {
      std::cerr << "unknown criterion " << id << "\n";
      return 2;
    }
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      it->second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    if (o.violations > 5) o.detail << " (+" << o.violations - 5 << " more)";
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, o.detail.str().c_str(), secs);
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
