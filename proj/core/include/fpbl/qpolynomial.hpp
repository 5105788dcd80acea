#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fpbl/arith.hpp"

namespace fpbl {

/// Integer polynomial in q; coeffs[k] is the coefficient of q^k. Trailing
/// zeros are always trimmed, so the zero polynomial has no coefficients.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs);

  /// Degree of the highest nonzero coefficient; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of q^k (zero beyond the degree).
  BigInt coeff(std::size_t k) const;
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  Rational evaluate(const Rational& q) const;
  double evaluate(double q) const;
  BigInt sum_of_coefficients() const;

  /// Formal derivative in q.
  QPolynomial derivative() const;

  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator-=(const QPolynomial& rhs);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// e.g. "q^4 + 3q^2 + 4q + 6".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace fpbl
