#include "fpbl/reference_law.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fpbl/combinatorics.hpp"
#include "fpbl/special.hpp"

namespace fpbl {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool open_unit(const Rational& p) { return sgn(p) > 0 && cmp(p, 1) < 0; }

}  // namespace

ReferenceLaw ReferenceLaw::poisson(const Rational& lambda) {
  if (sgn(lambda) <= 0) throw std::invalid_argument("Poisson: lambda must be > 0");
  return ReferenceLaw(Poisson{lambda});
}

ReferenceLaw ReferenceLaw::bernoulli_sum(const Rational& p) {
  if (!open_unit(p)) throw std::invalid_argument("BernoulliSum: p must lie in (0,1)");
  return ReferenceLaw(BernoulliSum{p});
}

ReferenceLaw ReferenceLaw::negative_binomial(unsigned r, const Rational& p) {
  if (r == 0) throw std::invalid_argument("NegativeBinomial: r must be a positive integer");
  // p = 1 is kept as the degenerate point mass at 0.
  if (sgn(p) <= 0 || cmp(p, 1) > 0) throw std::invalid_argument("NegativeBinomial: p must lie in (0,1]");
  return ReferenceLaw(NegativeBinomial{r, p});
}

ReferenceLaw ReferenceLaw::rayleigh(double sigma) {
  if (!(sigma > 0) || !std::isfinite(sigma)) throw std::invalid_argument("Rayleigh: sigma must be > 0");
  return ReferenceLaw(Rayleigh{sigma});
}

ReferenceLaw ReferenceLaw::normal(double mean, double variance) {
  if (!(variance > 0) || !std::isfinite(variance) || !std::isfinite(mean)) {
    throw std::invalid_argument("Normal: variance must be > 0");
  }
  return ReferenceLaw(Normal{mean, variance});
}

bool ReferenceLaw::discrete() const noexcept {
  return std::holds_alternative<Poisson>(law_) || std::holds_alternative<BernoulliSum>(law_) ||
         std::holds_alternative<NegativeBinomial>(law_);
}

std::string ReferenceLaw::name() const {
  return std::visit(overloaded{
                        [](const Poisson& l) { return "Poisson(" + to_string(l.lambda) + ")"; },
                        [](const BernoulliSum& l) { return "BernoulliSum(" + to_string(l.p) + ")"; },
                        [](const NegativeBinomial& l) {
                          return "NegBin(" + std::to_string(l.r) + "," + to_string(l.p) + ")";
                        },
                        [](const Rayleigh& l) { return "Rayleigh(" + std::to_string(l.sigma) + ")"; },
                        [](const Normal& l) {
                          return "Normal(" + std::to_string(l.mean) + "," + std::to_string(l.variance) + ")";
                        },
                    },
                    law_);
}

std::optional<Rational> ReferenceLaw::exact_pmf(long k) const {
  if (const auto* b = std::get_if<BernoulliSum>(&law_)) {
    const Rational& p = b->p;
    const Rational q = 1 - p;
    switch (k) {
      case 0: return Rational(q * q);
      case 1: return Rational(2 * p * q);
      case 2: return Rational(p * p);
      default: return Rational(0);
    }
  }
  if (const auto* nb = std::get_if<NegativeBinomial>(&law_)) {
    if (k < 0) return Rational(0);
    const auto uk = static_cast<unsigned long>(k);
    Rational out(binomial(uk + nb->r - 1, uk));
    out *= pow(Rational(1 - nb->p), uk) * pow(nb->p, nb->r);
    return out;
  }
  return std::nullopt;
}

double ReferenceLaw::pmf(long k) const {
  if (!discrete()) throw std::logic_error(name() + " has no pmf");
  if (k < 0) return 0.0;
  if (const auto* po = std::get_if<Poisson>(&law_)) {
    const double lambda = po->lambda.get_d();
    return std::exp(k * std::log(lambda) - lambda - std::lgamma(static_cast<double>(k) + 1.0));
  }
  if (const auto* nb = std::get_if<NegativeBinomial>(&law_)) {
    // Log form avoids overflow of the binomial for large k.
    if (nb->p == 1) return k == 0 ? 1.0 : 0.0;
    const double p = nb->p.get_d();
    const double r = nb->r;
    const double kk = static_cast<double>(k);
    return std::exp(std::lgamma(kk + r) - std::lgamma(kk + 1.0) - std::lgamma(r) + kk * std::log1p(-p) +
                    r * std::log(p));
  }
  return exact_pmf(k)->get_d();
}

double ReferenceLaw::cdf(double x) const {
  return std::visit(overloaded{
                        [&](const Rayleigh& l) {
                          if (x <= 0) return 0.0;
                          return -std::expm1(-x * x / (2.0 * l.sigma * l.sigma));
                        },
                        [&](const Normal& l) { return normal_cdf((x - l.mean) / std::sqrt(l.variance)); },
                        [&](const auto&) {
                          if (x < 0) return 0.0;
                          double s = 0;
                          const long top = static_cast<long>(std::floor(x));
                          for (long k = 0; k <= top; ++k) s += pmf(k);
                          return std::min(s, 1.0);
                        },
                    },
                    law_);
}

double ReferenceLaw::mean() const {
  return std::visit(overloaded{
                        [](const Poisson& l) { return l.lambda.get_d(); },
                        [](const BernoulliSum& l) { return 2.0 * l.p.get_d(); },
                        [](const NegativeBinomial& l) {
                          const double p = l.p.get_d();
                          return l.r * (1.0 - p) / p;
                        },
                        [](const Rayleigh& l) { return l.sigma * std::sqrt(std::numbers::pi / 2.0); },
                        [](const Normal& l) { return l.mean; },
                    },
                    law_);
}

}  // namespace fpbl
