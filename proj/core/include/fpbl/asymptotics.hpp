#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fpbl/arith.hpp"
#include "fpbl/pmf.hpp"
#include "fpbl/reference_law.hpp"

namespace fpbl {

enum class Regime { subcritical, critical, supercritical };
std::string to_string(Regime r);

/// Exact on rationals: compares q with 3.
Regime classify(const Rational& q);

/// Leading-order form of Z_n(q,tau) = prefactor * n^power * growth_base^n.
struct RegimePrediction {
  Regime regime;
  Rational zeta;            ///< dominant singularity
  double prefactor;
  Rational polynomial_power;
  double growth_base;       ///< 1/zeta
  std::string formula_id;   ///< "branch-point", "critical", "pole"

  double log_value(std::size_t n) const;
};

/// Throws std::invalid_argument for q <= 0.
RegimePrediction lemma1(const Rational& q);

enum class ValueScale { linear, log };

/// Predicted Z_n(q,tau). Linear values are long double and overflow to inf
/// for n beyond roughly 8000 at q <= 3.
long double lemma1_predict(const Rational& q, std::size_t n, ValueScale scale = ValueScale::log);

/// ln Z_n(q,tau) computed exactly and converted via bit length and mantissa.
std::vector<double> log_partition_function(const Rational& q, std::size_t n_max);

/// Center mu(q) and variance coefficient sigma^2(q) of the normal limit, q > 3.
Rational normal_mean_coefficient(const Rational& q);
Rational normal_variance_coefficient(const Rational& q);

/// A limit law together with the affine normalisation (X - center)/scale.
/// center = center_coefficient * n; scale is 1 for identity scaling and
/// sqrt(scale_coefficient * n) otherwise.
struct LimitLawSpec {
  int theorem_id;
  ReferenceLaw law;
  Rational center_coefficient = 0;
  Rational scale_coefficient = 1;
  bool identity_scaling = true;
  std::optional<Pattern3> tau;  ///< avoided pattern; none for S_n
  std::string hypothesis;

  double center(std::size_t n) const;
  double scale(std::size_t n) const;
};

/// Limit law for theorem_id 1..5 at q; refuses when q is outside its range.
LimitLawSpec limit_law(int theorem_id, const Rational& q);

/// E[R^m] = (sigma sqrt 2)^m Gamma(m/2 + 1), m > -2.
double rayleigh_moment(double m, double sigma);

/// Leading-order E[(X_n)_m] at q = 3: 3^m Gamma(m/2 + 1) n^(m/2).
double factorial_moment_prediction(unsigned m, std::size_t n);

struct ConvergenceRow {
  std::size_t n;
  std::string exact;     ///< decimal string, or a natural log when huge
  double exact_log;
  double predicted_log;
  double ratio;          ///< exp(exact_log - predicted_log)
};

struct ConvergenceTable {
  std::string kind;
  std::vector<ConvergenceRow> rows;
  /// Whether |ratio - 1| is non-increasing over the last half of the grid.
  bool monotone_tail = true;
};

struct DistanceRow {
  std::size_t n;
  std::string metric;  ///< "tv" or "kolmogorov"
  double distance;
  PmfMode mode;
};

/// Distance of the fp law to the limit law of `theorem_id` at each n.
/// theorem_id 2 uses Monte-Carlo pmfs of 123-avoiders beyond the enumeration
/// cap; ids 3 to 5 use `mode` (exact or scaled-float).
std::vector<DistanceRow> distance_table(int theorem_id, const Rational& q, const std::vector<std::size_t>& n_grid,
                                        PmfMode mode, const PmfOptions& options = {});

enum class ConvergenceKind { lemma1, moments, distance };
ConvergenceKind parse_convergence_kind(const std::string& text);

struct ConvergenceParams {
  Rational q = 1;
  unsigned m = 1;       ///< moments
  int theorem_id = 1;   ///< distance
  PmfMode mode = PmfMode::exact;
  PmfOptions options;
};

/// lemma1: Z_n(q,tau) against lemma1_predict. moments: E[(X_n)_m] under
/// P_n^{3,tau} against factorial_moment_prediction (q must be 3).
/// distance: exact = the distance, predicted = 0, ratio = the distance.
ConvergenceTable convergence_table(ConvergenceKind kind, const ConvergenceParams& params,
                                   const std::vector<std::size_t>& n_grid);

}  // namespace fpbl
