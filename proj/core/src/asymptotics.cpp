#include "fpbl/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fpbl/distance.hpp"
#include "fpbl/errors.hpp"
#include "fpbl/series.hpp"
#include "fpbl/special.hpp"

namespace fpbl {

namespace {

void require_positive(const Rational& q) {
  if (sgn(q) <= 0) throw std::invalid_argument("q must be positive, got " + to_string(q));
}

}  // namespace

std::string to_string(Regime r) {
  switch (r) {
    case Regime::subcritical: return "subcritical";
    case Regime::critical: return "critical";
    case Regime::supercritical: return "supercritical";
  }
  return "?";
}

Regime classify(const Rational& q) {
  const int c = compare(q, 3);
  return c < 0 ? Regime::subcritical : c == 0 ? Regime::critical : Regime::supercritical;
}

double RegimePrediction::log_value(std::size_t n) const {
  const double nd = static_cast<double>(n);
  return std::log(prefactor) + polynomial_power.get_d() * std::log(nd) + nd * std::log(growth_base);
}

RegimePrediction lemma1(const Rational& q) {
  require_positive(q);
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  switch (classify(q)) {
    case Regime::subcritical: {
      const double d = Rational(3 - q).get_d();
      return {Regime::subcritical, Rational(1, 4), 4.0 / (d * d * sqrt_pi), Rational(-3, 2), 4.0, "branch-point"};
    }
    case Regime::critical:
      return {Regime::critical, Rational(1, 4), 2.0 / sqrt_pi, Rational(-1, 2), 4.0, "critical"};
    case Regime::supercritical: {
      const Rational qm1 = q - 1, qm2 = q - 2;
      const Rational zeta = qm2 / (qm1 * qm1);
      const Rational pref = qm1 * (q - 3) / (qm2 * qm2);
      return {Regime::supercritical, zeta, pref.get_d(), Rational(0), Rational(1 / zeta).get_d(), "pole"};
    }
  }
  throw std::logic_error("unreachable");
}

long double lemma1_predict(const Rational& q, std::size_t n, ValueScale scale) {
  if (n == 0) throw std::invalid_argument("lemma1_predict: n must be >= 1");
  const auto p = lemma1(q);
  const long double nd = static_cast<long double>(n);
  const long double lg = std::log(static_cast<long double>(p.prefactor)) +
                         static_cast<long double>(p.polynomial_power.get_d()) * std::log(nd) +
                         nd * std::log(static_cast<long double>(p.growth_base));
  return scale == ValueScale::log ? lg : std::exp(lg);
}

std::vector<double> log_partition_function(const Rational& q, std::size_t n_max) {
  const auto z = g_series_scaled(q, n_max);
  const double lb = std::log(q.get_den().get_d());
  std::vector<double> out(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) out[n] = log_abs(z.numerators[n]) - static_cast<double>(n) * lb;
  return out;
}

Rational normal_mean_coefficient(const Rational& q) {
  if (classify(q) != Regime::supercritical) throw std::invalid_argument("normal limit needs q > 3");
  return q * (q - 3) / ((q - 1) * (q - 2));
}

Rational normal_variance_coefficient(const Rational& q) {
  if (classify(q) != Regime::supercritical) throw std::invalid_argument("normal limit needs q > 3");
  const Rational a = q - 1, b = q - 2;
  return 2 * q * (2 * q - 3) / (a * a * b * b);
}

double LimitLawSpec::center(std::size_t n) const { return Rational(center_coefficient * static_cast<unsigned long>(n)).get_d(); }

double LimitLawSpec::scale(std::size_t n) const {
  if (identity_scaling) return 1.0;
  return std::sqrt(Rational(scale_coefficient * static_cast<unsigned long>(n)).get_d());
}

LimitLawSpec limit_law(int theorem_id, const Rational& q) {
  require_positive(q);
  auto refuse = [&](const std::string& hyp) {
    return Refusal("theorem " + std::to_string(theorem_id) + " requires " + hyp + "; got q=" + to_string(q));
  };
  switch (theorem_id) {
    case 1:
      return {1, ReferenceLaw::poisson(q), 0, 1, true, std::nullopt, "q > 0"};
    case 2:
      return {2, ReferenceLaw::bernoulli_sum(q / (3 + q)), 0, 1, true, Pattern3::p123, "q > 0"};
    case 3:
      if (compare(q, 3) >= 0) throw refuse("0 < q < 3");
      return {3, ReferenceLaw::negative_binomial(2, 1 - q / 3), 0, 1, true, Pattern3::p321, "0 < q < 3"};
    case 4:
      if (compare(q, 3) != 0) throw refuse("q = 3");
      return {4, ReferenceLaw::rayleigh(3.0 / std::numbers::sqrt2), 0, 1, false, Pattern3::p321, "q = 3"};
    case 5: {
      if (compare(q, 3) <= 0) throw refuse("q > 3");
      return {5, ReferenceLaw::normal(0.0, 1.0), normal_mean_coefficient(q), normal_variance_coefficient(q), false,
              Pattern3::p321, "q > 3"};
    }
    default:
      throw std::invalid_argument("theorem id must be 1..5, got " + std::to_string(theorem_id));
  }
}

double rayleigh_moment(double m, double sigma) {
  if (!(m > -2)) throw std::invalid_argument("rayleigh_moment: m must exceed -2");
  if (!(sigma > 0)) throw std::invalid_argument("rayleigh_moment: sigma must be positive");
  if (m == 0) return 1.0;
  return std::pow(sigma * std::numbers::sqrt2, m) * gamma_fn(m / 2 + 1);
}

double factorial_moment_prediction(unsigned m, std::size_t n) {
  return std::pow(3.0, m) * gamma_fn(m / 2.0 + 1) * std::pow(static_cast<double>(n), m / 2.0);
}

std::vector<DistanceRow> distance_table(int theorem_id, const Rational& q, const std::vector<std::size_t>& n_grid,
                                        PmfMode mode, const PmfOptions& options) {
  const auto spec = limit_law(theorem_id, q);
  std::vector<DistanceRow> rows;
  for (std::size_t n : n_grid) {
    MeasureSpec m{n, q, spec.tau};
    PmfMode used = mode;
    if (theorem_id == 2) used = n <= options.limits.avoider_cap ? PmfMode::exact : PmfMode::monte_carlo;
    const auto pmf = fp_pmf(m, used, options);
    if (spec.law.discrete()) {
      rows.push_back({n, "tv", static_cast<double>(tv_distance(pmf, spec.law)), used});
    } else {
      rows.push_back({n, "kolmogorov", kolmogorov_distance(pmf, spec.law, spec.center(n), spec.scale(n)), used});
    }
  }
  return rows;
}

ConvergenceKind parse_convergence_kind(const std::string& text) {
  if (text == "lemma1") return ConvergenceKind::lemma1;
  if (text == "moments") return ConvergenceKind::moments;
  if (text == "distance") return ConvergenceKind::distance;
  throw std::invalid_argument("unknown table kind '" + text + "' (expected lemma1, moments, distance)");
}

ConvergenceTable convergence_table(ConvergenceKind kind, const ConvergenceParams& params,
                                   const std::vector<std::size_t>& n_grid) {
  ConvergenceTable table;
  if (n_grid.empty()) return table;
  std::size_t n_max = 0;
  for (auto n : n_grid) n_max = std::max(n_max, n);

  switch (kind) {
    case ConvergenceKind::lemma1: {
      table.kind = "lemma1";
      const auto logs = log_partition_function(params.q, n_max);
      for (auto n : n_grid) {
        if (n == 0) throw std::invalid_argument("lemma1 table needs n >= 1");
        const double pred = static_cast<double>(lemma1_predict(params.q, n, ValueScale::log));
        table.rows.push_back({n, format_double(logs[n]), logs[n], pred, std::exp(logs[n] - pred)});
      }
      break;
    }
    case ConvergenceKind::moments: {
      table.kind = "moments";
      if (compare(params.q, 3) != 0) throw Refusal("moments table: the factorial-moment asymptotics hold at q = 3");
      const auto z = g_series_scaled(params.q, n_max, params.options.budgets);
      const auto gm = factorial_moment_scaled(params.m, params.q, n_max, params.options.budgets);
      for (auto n : n_grid) {
        if (n == 0) throw std::invalid_argument("moments table needs n >= 1");
        const double pred = std::log(factorial_moment_prediction(params.m, n));
        if (sgn(gm.numerators[n]) == 0) {
          table.rows.push_back({n, "0", -INFINITY, pred, 0.0});
          continue;
        }
        const double lexact = log_abs(gm.numerators[n]) - log_abs(z.numerators[n]);
        table.rows.push_back({n, format_double(std::exp(lexact)), lexact, pred, std::exp(lexact - pred)});
      }
      break;
    }
    case ConvergenceKind::distance: {
      table.kind = "distance";
      for (const auto& r : distance_table(params.theorem_id, params.q, n_grid, params.mode, params.options)) {
        table.rows.push_back({r.n, format_double(r.distance), std::log(r.distance), 0.0, r.distance});
      }
      return table;
    }
  }
  const std::size_t half = table.rows.size() / 2;
  for (std::size_t i = half + 1; i < table.rows.size(); ++i) {
    if (std::fabs(table.rows[i].ratio - 1) > std::fabs(table.rows[i - 1].ratio - 1)) table.monotone_tail = false;
  }
  return table;
}

}  // namespace fpbl
