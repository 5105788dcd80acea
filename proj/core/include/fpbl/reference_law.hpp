#pragma once

#include <optional>
#include <string>
#include <variant>

#include "fpbl/arith.hpp"

namespace fpbl {

/// Limit laws for fixed-point counts. Parameters are validated on
/// construction; discrete laws keep rational parameters so their pmfs can be
/// evaluated exactly (Bernoulli sum, negative binomial) or to arbitrary
/// precision (Poisson).
class ReferenceLaw {
 public:
  struct Poisson { Rational lambda; };
  /// A + B for independent A, B ~ Bernoulli(p).
  struct BernoulliSum { Rational p; };
  /// P(N = k) = binom(k + r - 1, k) (1-p)^k p^r.
  struct NegativeBinomial { unsigned r; Rational p; };
  /// Density x/sigma^2 exp(-x^2 / (2 sigma^2)) on x >= 0.
  struct Rayleigh { double sigma; };
  struct Normal { double mean; double variance; };

  using Variant = std::variant<Poisson, BernoulliSum, NegativeBinomial, Rayleigh, Normal>;

  static ReferenceLaw poisson(const Rational& lambda);
  static ReferenceLaw bernoulli_sum(const Rational& p);
  static ReferenceLaw negative_binomial(unsigned r, const Rational& p);
  static ReferenceLaw rayleigh(double sigma);
  static ReferenceLaw normal(double mean, double variance);

  const Variant& variant() const noexcept { return law_; }
  bool discrete() const noexcept;
  std::string name() const;

  /// P(X = k) for discrete laws. Throws std::logic_error for continuous ones.
  double pmf(long k) const;
  /// Exact P(X = k) when it is rational (Bernoulli sum, negative binomial).
  std::optional<Rational> exact_pmf(long k) const;
  /// P(X <= x).
  double cdf(double x) const;

  double mean() const;

 private:
  explicit ReferenceLaw(Variant v) : law_(std::move(v)) {}
  Variant law_;
};

}  // namespace fpbl
