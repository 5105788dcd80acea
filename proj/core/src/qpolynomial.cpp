#include "fpbl/qpolynomial.hpp"

#include <algorithm>

namespace fpbl {

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPolynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

Rational QPolynomial::evaluate(const Rational& q) const {
  // Horner over q = a/b, scaled by b^deg to stay in integers.
  if (coeffs_.empty()) return 0;
  const BigInt& a = q.get_num();
  const BigInt& b = q.get_den();
  BigInt acc = 0;
  BigInt bpow = 1;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc = acc * a + coeffs_[k] * bpow;
    bpow *= b;
  }
  Rational out(acc, bpow / b);
  out.canonicalize();
  return out;
}

double QPolynomial::evaluate(double q) const {
  double acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * q + coeffs_[k].get_d();
  return acc;
}

BigInt QPolynomial::sum_of_coefficients() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

QPolynomial QPolynomial::derivative() const {
  std::vector<BigInt> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<unsigned long>(k));
  return QPolynomial(std::move(d));
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return QPolynomial(std::move(c));
}

std::string QPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += mag.get_str();
    if (k >= 1) out += "q";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace fpbl
