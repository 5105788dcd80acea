#pragma once

// Coefficient extraction for
//
//   G(z,q) = 2 / (1 + 2(1-q)z + sqrt(1-4z)) = sum_n g_n(q) z^n,
//
// the fixed-point generating function shared by the 132-, 321- and
// 213-avoiding classes, together with its column series A_k(z) = [q^k]G,
// its factorial-moment transforms G_m, and the closed form of the
// unrestricted partition function Z_n(q).
//
// Everything is driven by the coefficients s_j of sqrt(1-4z) and by linear
// recurrences obtained from clearing denominators, e.g.
//
//   2 g_n = -2(1-q) g_{n-1} - sum_{j=1..n} s_j g_{n-j},       g_0 = 1,
//   2 a_{k,n} = 2 a_{k-1,n-1} - sum_{j>=2} s_j a_{k,n-j},      a_{0,0} = 1.
//
// Exact modes use GMP integers throughout. Values at a rational q = a/b are
// carried as integer numerators over b^n so that the recurrences never
// divide by anything other than 2 (or n, in the power recurrence).

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fpbl/arith.hpp"
#include "fpbl/qpolynomial.hpp"

namespace fpbl {

/// Size limits for each computation mode. Configuration, not constants:
/// override with FPBL_BUDGET="poly=2000,eval=20000,columns=800,float=8000".
struct SeriesBudgets {
  std::size_t exact_poly = 1500;     ///< n_max for full polynomials g_n(q)
  std::size_t exact_eval = 10000;    ///< n_max for exact values at fixed q
  std::size_t exact_columns = 400;   ///< k_max for exact column tables
  std::size_t scaled_float = 5000;   ///< n_max for scaled-float tables

  static SeriesBudgets from_environment();
  /// Parses the FPBL_BUDGET syntax. A bare integer sets every budget.
  static SeriesBudgets parse(const std::string& text);
  static SeriesBudgets parse(const std::string& text, SeriesBudgets base);
};

enum class SeriesMode { exact_poly, exact_eval, scaled_float };

std::string to_string(SeriesMode mode);

/// Immutable per-n table of coefficients of one generating function.
struct SeriesTable {
  std::string generating_function;
  std::optional<Rational> q;
  SeriesMode mode = SeriesMode::exact_eval;
  std::variant<std::vector<QPolynomial>, std::vector<Rational>, std::vector<double>> values;

  std::size_t size() const;
  const std::vector<QPolynomial>& polynomials() const { return std::get<std::vector<QPolynomial>>(values); }
  const std::vector<Rational>& rationals() const { return std::get<std::vector<Rational>>(values); }
  const std::vector<double>& floats() const { return std::get<std::vector<double>>(values); }
};

/// Coefficients v_n / base^n with integer v_n.
struct ScaledSeries {
  BigInt base = 1;
  std::vector<BigInt> numerators;

  Rational value(std::size_t n) const;
  std::size_t size() const { return numerators.size(); }
};

/// [z^n] sqrt(1-4z) for n = 0..n_max: 1, -2, -2, -4, -10, -28, ...
std::vector<BigInt> sqrt_coefficients(std::size_t n_max);
SeriesTable sqrt_series(std::size_t n_max);

/// g_0..g_{n_max} as polynomials in q. Refuses above budgets.exact_poly.
SeriesTable g_series_poly(std::size_t n_max, const SeriesBudgets& budgets = SeriesBudgets::from_environment());

/// Z_n(q,tau) = g_n(q) at a fixed rational q >= 0, scaled-integer form.
ScaledSeries g_series_scaled(const Rational& q, std::size_t n_max,
                             const SeriesBudgets& budgets = SeriesBudgets::from_environment());
/// Same values as canonical rationals.
SeriesTable g_series_eval(const Rational& q, std::size_t n_max,
                          const SeriesBudgets& budgets = SeriesBudgets::from_environment());

/// Lower-triangular table of column coefficients, indexed (k, n) with
/// 0 <= k <= min(n, k_max), n <= n_max.
///
/// Exact tables hold a_{k,n}. Float tables hold a_{k,n} * weight^k * scale^n;
/// column_series(scaled_float) uses weight 1 and scale 1/4 (i.e. a_{k,n}/4^n).
class ColumnTable {
 public:
  std::size_t k_max() const { return k_max_; }
  std::size_t n_max() const { return n_max_; }
  bool exact() const { return !exact_.empty(); }
  double weight() const { return weight_; }
  double scale() const { return scale_; }

  const BigInt& exact_at(std::size_t k, std::size_t n) const { return exact_[k][n - k]; }
  double at(std::size_t k, std::size_t n) const;
  /// Entries k = 0..min(n, k_max) of row n.
  std::vector<double> row(std::size_t n) const;
  std::vector<BigInt> exact_row(std::size_t n) const;

 private:
  friend ColumnTable column_series(std::size_t, std::size_t, SeriesMode, const SeriesBudgets&);
  friend ColumnTable weighted_columns(double, double, std::size_t, std::size_t, const SeriesBudgets&);

  std::size_t k_max_ = 0;
  std::size_t n_max_ = 0;
  double weight_ = 1.0;
  double scale_ = 1.0;
  std::vector<std::vector<BigInt>> exact_;  // exact_[k][n-k]
  std::vector<std::vector<double>> float_;  // float_[k][n-k]
};

/// mode must be exact_eval (big integers) or scaled_float (a_{k,n}/4^n).
ColumnTable column_series(std::size_t k_max, std::size_t n_max, SeriesMode mode,
                          const SeriesBudgets& budgets = SeriesBudgets::from_environment());

/// Float columns of a_{k,n} * weight^k * scale^n. Choosing scale as the
/// reciprocal growth rate of Z_n(weight) keeps the row sums O(1) so that a
/// whole row can be normalised into a pmf without overflow. Denormals are
/// flushed to zero while the table is built.
ColumnTable weighted_columns(double weight, double scale, std::size_t k_max, std::size_t n_max,
                             const SeriesBudgets& budgets = SeriesBudgets::from_environment());

/// Natural exponential growth rate of Z_n(q,tau): 4 for q <= 3,
/// (q-1)^2/(q-2) above.
double growth_rate(double q);

/// Z_n(q) over all of S_n: sum_k binom(n,k) D_{n-k} q^k.
Rational unrestricted_Z(const Rational& q, std::size_t n);

/// Integer weights w_k = binom(n,k) D_{n-k} a^k b^{n-k} for q = a/b; they sum
/// to b^n Z_n(q).
std::vector<BigInt> unrestricted_weights(const Rational& q, std::size_t n);

/// [z^n] G(z,q)^r for n = 0..n_max in scaled form, by the power recurrence
///   n g_0 p_n = sum_{k=1..n} ((r+1)k - n) g_k p_{n-k}.
ScaledSeries series_power(const ScaledSeries& g, unsigned r, std::size_t n_max);

/// [z^n] G_m(z,q) with G_m = m! (qz)^m G^{m+1}, scaled form over q's denominator.
ScaledSeries factorial_moment_scaled(unsigned m, const Rational& q, std::size_t n_max,
                                     const SeriesBudgets& budgets = SeriesBudgets::from_environment());
SeriesTable factorial_moment_series(unsigned m, const Rational& q, std::size_t n_max,
                                    const SeriesBudgets& budgets = SeriesBudgets::from_environment());

}  // namespace fpbl
