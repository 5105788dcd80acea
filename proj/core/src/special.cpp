#include "fpbl/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fpbl {

namespace {

constexpr double kT[] = {9.60497373987051638749E0, 9.00260197203842689217E1, 2.23200534594684319226E3,
                         7.00332514112805075473E3, 5.55923013010394962768E4};
constexpr double kU[] = {3.35617141647503099647E1, 5.21357949780152679795E2, 4.59432382970980127987E3,
                         2.26290000613890934246E4, 4.92673942608635921086E4};
constexpr double kP[] = {2.46196981473530512524E-10, 5.64189564831068821977E-1, 7.46321056442269912687E0,
                         4.86371970985681366614E1,   1.96520832956077098242E2,  5.26445194995477358631E2,
                         9.34528527171957607540E2,   1.02755188689515710272E3,  5.57535335369399327526E2};
constexpr double kQ[] = {1.32281951154744992508E1, 8.67072140885989742329E1, 3.54937778887819891062E2,
                         9.75708501743205489753E2, 1.82390916687909736289E3, 2.24633760818710981792E3,
                         1.65666309194161350182E3, 5.57535340817727675546E2};
constexpr double kR[] = {5.64189583547755073984E-1, 1.27536670759978104416E0, 5.01905042251180477414E0,
                         6.16021097993053585195E0,  7.40974269950448939160E0, 2.97886665372100240670E0};
constexpr double kS[] = {2.26052863220117276590E0, 9.39603524938001434673E0, 1.20489539808096656605E1,
                         1.70814450747565897222E1, 9.60896809063285878198E0, 3.36907645100081516050E0};

// Horner; the monic variant has an implicit leading coefficient of 1.
template <std::size_t N>
double polevl(double x, const double (&c)[N]) {
  double r = c[0];
  for (std::size_t i = 1; i < N; ++i) r = r * x + c[i];
  return r;
}

template <std::size_t N>
double p1evl(double x, const double (&c)[N]) {
  double r = x + c[0];
  for (std::size_t i = 1; i < N; ++i) r = r * x + c[i];
  return r;
}

double erfc_positive(double a) {
  // a > 1
  const double z = -a * a;
  if (z < -7.09782712893383996843E2) return 0.0;
  const double e = std::exp(z);
  double p, q;
  if (a < 8.0) {
    p = polevl(a, kP);
    q = p1evl(a, kQ);
  } else {
    p = polevl(a, kR);
    q = p1evl(a, kS);
  }
  return e * p / q;
}

}  // namespace

double erf_approx(double x) {
  if (std::isnan(x)) return x;
  if (std::fabs(x) > 1.0) return 1.0 - erfc_approx(x);
  const double z = x * x;
  return x * polevl(z, kT) / p1evl(z, kU);
}

double erfc_approx(double x) {
  if (std::isnan(x)) return x;
  const double a = std::fabs(x);
  if (a < 1.0) return 1.0 - erf_approx(x);
  const double y = erfc_positive(a);
  return x < 0 ? 2.0 - y : y;
}

double normal_cdf(double x) {
  const double t = x / std::numbers::sqrt2;
  if (t < -1.0) return 0.5 * erfc_approx(-t);
  if (t > 1.0) return 1.0 - 0.5 * erfc_approx(t);
  return 0.5 + 0.5 * erf_approx(t);
}

double gamma_fn(double x) {
  if (std::isnan(x)) return x;
  const double twice = 2.0 * x;
  if (twice == std::floor(twice) && x > 0 && x < 171.0) {
    if (x == std::floor(x)) {
      double r = 1.0;
      for (double k = 2.0; k < x; k += 1.0) r *= k;
      return r;
    }
    // Gamma(k + 1/2) = (2k-1)!! / 2^k * sqrt(pi)
    double r = std::sqrt(std::numbers::pi);
    for (double k = 0.5; k < x; k += 1.0) r *= k;
    return r;
  }
  if (x <= 0 && x == std::floor(x)) throw std::domain_error("gamma pole at nonpositive integer");
  if (x < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_fn(1.0 - x));
  static constexpr double kLanczos[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                        771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double g = 7.0;
  const double xm = x - 1.0;
  double sum = kLanczos[0];
  for (int i = 1; i < 9; ++i) sum += kLanczos[i] / (xm + i);
  const double t = xm + g + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, xm + 0.5) * std::exp(-t) * sum;
}

}  // namespace fpbl
