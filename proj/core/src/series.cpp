#include "fpbl/series.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "fpbl/combinatorics.hpp"
#include "fpbl/errors.hpp"

#if defined(__x86_64__) || defined(__SSE2__)
#include <xmmintrin.h>
#define FPBL_HAVE_MXCSR 1
#endif

namespace fpbl {

namespace {

#ifdef FPBL_HAVE_MXCSR
// Sets flush-to-zero and denormals-are-zero for the current thread.
class FlushDenormals {
 public:
  FlushDenormals() : saved_(_mm_getcsr()) { _mm_setcsr(saved_ | 0x8040u); }
  ~FlushDenormals() { _mm_setcsr(saved_); }
  FlushDenormals(const FlushDenormals&) = delete;
  FlushDenormals& operator=(const FlushDenormals&) = delete;

 private:
  unsigned saved_;
};
#else
struct FlushDenormals {};
#endif

double dot(const double* a, const double* b, std::size_t len) {
  double s0 = 0, s1 = 0, s2 = 0, s3 = 0;
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    s0 += a[i] * b[i];
    s1 += a[i + 1] * b[i + 1];
    s2 += a[i + 2] * b[i + 2];
    s3 += a[i + 3] * b[i + 3];
  }
  for (; i < len; ++i) s0 += a[i] * b[i];
  return (s0 + s1) + (s2 + s3);
}

void require_nonnegative(const Rational& q) {
  if (sgn(q) < 0) throw std::invalid_argument("q must be nonnegative, got " + to_string(q));
}

}  // namespace

SeriesBudgets SeriesBudgets::parse(const std::string& text, SeriesBudgets base) {
  auto to_size = [&](const std::string& v) {
    char* end = nullptr;
    unsigned long long x = std::strtoull(v.c_str(), &end, 10);
    if (v.empty() || *end != '\0') throw std::invalid_argument("bad budget value '" + v + "' in '" + text + "'");
    return static_cast<std::size_t>(x);
  };
  if (text.empty()) return base;
  if (text.find('=') == std::string::npos) {
    std::size_t all = to_size(text);
    return SeriesBudgets{all, all, all, all};
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad budget entry '" + item + "'");
    std::string key = item.substr(0, eq);
    std::size_t value = to_size(item.substr(eq + 1));
    if (key == "poly") {
      base.exact_poly = value;
    } else if (key == "eval") {
      base.exact_eval = value;
    } else if (key == "columns") {
      base.exact_columns = value;
    } else if (key == "float") {
      base.scaled_float = value;
    } else {
      throw std::invalid_argument("unknown budget '" + key + "' (expected poly, eval, columns, float)");
    }
  }
  return base;
}

SeriesBudgets SeriesBudgets::parse(const std::string& text) { return parse(text, SeriesBudgets{}); }

SeriesBudgets SeriesBudgets::from_environment() {
  const char* env = std::getenv("FPBL_BUDGET");
  return env ? parse(env) : SeriesBudgets{};
}

std::string to_string(SeriesMode mode) {
  switch (mode) {
    case SeriesMode::exact_poly: return "exact-poly";
    case SeriesMode::exact_eval: return "exact-eval";
    case SeriesMode::scaled_float: return "scaled-float";
  }
  return "?";
}

std::size_t SeriesTable::size() const {
  return std::visit([](const auto& v) { return v.size(); }, values);
}

Rational ScaledSeries::value(std::size_t n) const {
  Rational r(numerators.at(n), pow(base, static_cast<unsigned long>(n)));
  r.canonicalize();
  return r;
}

std::vector<BigInt> sqrt_coefficients(std::size_t n_max) {
  // s_{n+1} = s_n (4n - 2) / (n + 1), from the binomial series of (1-4z)^{1/2}.
  std::vector<BigInt> s(n_max + 1);
  s[0] = 1;
  for (std::size_t n = 0; n < n_max; ++n) {
    BigInt t = s[n] * (4 * static_cast<long>(n) - 2);
    mpz_divexact_ui(s[n + 1].get_mpz_t(), t.get_mpz_t(), n + 1);
  }
  return s;
}

SeriesTable sqrt_series(std::size_t n_max) {
  std::vector<Rational> v;
  v.reserve(n_max + 1);
  for (auto& c : sqrt_coefficients(n_max)) v.emplace_back(c);
  return SeriesTable{"sqrt(1-4z)", std::nullopt, SeriesMode::exact_eval, std::move(v)};
}

SeriesTable g_series_poly(std::size_t n_max, const SeriesBudgets& budgets) {
  if (n_max > budgets.exact_poly) {
    throw Refusal("g_series_poly: n_max=" + std::to_string(n_max) + " exceeds the exact-poly budget " +
                  std::to_string(budgets.exact_poly) +
                  "; use g_series_eval for a fixed q or column_series for individual coefficients");
  }
  const auto s = sqrt_coefficients(n_max);
  std::vector<std::vector<BigInt>> g(n_max + 1);
  g[0] = {BigInt(1)};
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<BigInt> acc(n + 1);
    // 2(q - 1) g_{n-1}
    const auto& prev = g[n - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      mpz_addmul_ui(acc[k + 1].get_mpz_t(), prev[k].get_mpz_t(), 2);
      mpz_submul_ui(acc[k].get_mpz_t(), prev[k].get_mpz_t(), 2);
    }
    // - sum_j s_j g_{n-j}
    for (std::size_t j = 1; j <= n; ++j) {
      const auto& gj = g[n - j];
      for (std::size_t k = 0; k < gj.size(); ++k) mpz_submul(acc[k].get_mpz_t(), s[j].get_mpz_t(), gj[k].get_mpz_t());
    }
    for (auto& c : acc) mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), 2);
    while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
    g[n] = std::move(acc);
  }
  std::vector<QPolynomial> polys;
  polys.reserve(g.size());
  for (auto& c : g) polys.emplace_back(std::move(c));
  return SeriesTable{"G(z,q)", std::nullopt, SeriesMode::exact_poly, std::move(polys)};
}

ScaledSeries g_series_scaled(const Rational& q, std::size_t n_max, const SeriesBudgets& budgets) {
  require_nonnegative(q);
  if (n_max > budgets.exact_eval) {
    throw Refusal("g_series_eval: n_max=" + std::to_string(n_max) + " exceeds the exact-eval budget " +
                  std::to_string(budgets.exact_eval) + "; use scaled-float mode or raise FPBL_BUDGET eval=");
  }
  const BigInt& a = q.get_num();
  const BigInt& b = q.get_den();
  // t_j = s_j b^j so that h_n = b^n g_n(q) satisfies
  // 2 h_n = 2(a - b) h_{n-1} - sum_j t_j h_{n-j}.
  auto t = sqrt_coefficients(n_max);
  if (b != 1) {
    BigInt bj = 1;
    for (std::size_t j = 1; j <= n_max; ++j) {
      bj *= b;
      t[j] *= bj;
    }
  }
  const BigInt twice_diff = 2 * (a - b);
  ScaledSeries out;
  out.base = b;
  out.numerators.resize(n_max + 1);
  auto& h = out.numerators;
  h[0] = 1;
  BigInt acc;
  for (std::size_t n = 1; n <= n_max; ++n) {
    mpz_mul(acc.get_mpz_t(), twice_diff.get_mpz_t(), h[n - 1].get_mpz_t());
    for (std::size_t j = 1; j <= n; ++j) mpz_submul(acc.get_mpz_t(), t[j].get_mpz_t(), h[n - j].get_mpz_t());
    mpz_divexact_ui(h[n].get_mpz_t(), acc.get_mpz_t(), 2);
  }
  return out;
}

SeriesTable g_series_eval(const Rational& q, std::size_t n_max, const SeriesBudgets& budgets) {
  auto scaled = g_series_scaled(q, n_max, budgets);
  std::vector<Rational> v;
  v.reserve(n_max + 1);
  BigInt bn = 1;
  for (std::size_t n = 0; n <= n_max; ++n) {
    Rational r(scaled.numerators[n], bn);
    r.canonicalize();
    v.push_back(std::move(r));
    bn *= scaled.base;
  }
  return SeriesTable{"G(z,q)", q, SeriesMode::exact_eval, std::move(v)};
}

double ColumnTable::at(std::size_t k, std::size_t n) const {
  if (k > k_max_ || k > n || n > n_max_) throw std::out_of_range("column table index out of range");
  if (exact()) return exact_[k][n - k].get_d() * std::pow(weight_, static_cast<double>(k)) * std::pow(scale_, static_cast<double>(n));
  return float_[k][n - k];
}

std::vector<double> ColumnTable::row(std::size_t n) const {
  if (n > n_max_) throw std::out_of_range("column table row out of range");
  const std::size_t top = std::min(n, k_max_);
  std::vector<double> r(top + 1);
  for (std::size_t k = 0; k <= top; ++k) r[k] = at(k, n);
  return r;
}

std::vector<BigInt> ColumnTable::exact_row(std::size_t n) const {
  if (!exact()) throw std::logic_error("exact_row on a float column table");
  if (n > n_max_) throw std::out_of_range("column table row out of range");
  const std::size_t top = std::min(n, k_max_);
  std::vector<BigInt> r(top + 1);
  for (std::size_t k = 0; k <= top; ++k) r[k] = exact_[k][n - k];
  return r;
}

ColumnTable column_series(std::size_t k_max, std::size_t n_max, SeriesMode mode, const SeriesBudgets& budgets) {
  if (k_max > n_max) throw std::invalid_argument("column_series: k_max must not exceed n_max");
  if (mode == SeriesMode::scaled_float) return weighted_columns(1.0, 0.25, k_max, n_max, budgets);
  if (mode != SeriesMode::exact_eval) throw std::invalid_argument("column_series: mode must be exact or scaled-float");
  if (k_max > budgets.exact_columns) {
    throw Refusal("column_series: k_max=" + std::to_string(k_max) + " exceeds the exact column budget " +
                  std::to_string(budgets.exact_columns) + "; use scaled-float mode");
  }
  if (n_max > budgets.exact_eval) {
    throw Refusal("column_series: n_max=" + std::to_string(n_max) + " exceeds the exact-eval budget " +
                  std::to_string(budgets.exact_eval));
  }
  // alpha = 1 + 2z + sqrt(1-4z) = 2 + sum_{j>=2} s_j z^j; alpha A_k = 2z A_{k-1}.
  const auto s = sqrt_coefficients(n_max);
  ColumnTable table;
  table.k_max_ = k_max;
  table.n_max_ = n_max;
  table.exact_.resize(k_max + 1);
  BigInt acc;
  for (std::size_t k = 0; k <= k_max; ++k) {
    auto& col = table.exact_[k];
    col.resize(n_max - k + 1);
    for (std::size_t d = 0; d < col.size(); ++d) {
      if (k == 0) {
        acc = d == 0 ? 2 : 0;
      } else {
        acc = 2 * table.exact_[k - 1][d];
      }
      for (std::size_t j = 2; j <= d; ++j) mpz_submul(acc.get_mpz_t(), s[j].get_mpz_t(), col[d - j].get_mpz_t());
      mpz_divexact_ui(col[d].get_mpz_t(), acc.get_mpz_t(), 2);
    }
  }
  return table;
}

ColumnTable weighted_columns(double weight, double scale, std::size_t k_max, std::size_t n_max,
                             const SeriesBudgets& budgets) {
  if (k_max > n_max) throw std::invalid_argument("weighted_columns: k_max must not exceed n_max");
  if (!(weight > 0) || !(scale > 0) || !std::isfinite(weight) || !std::isfinite(scale)) {
    throw std::invalid_argument("weighted_columns: weight and scale must be positive and finite");
  }
  if (n_max > budgets.scaled_float) {
    throw Refusal("scaled-float: n_max=" + std::to_string(n_max) + " exceeds the scaled-float budget " +
                  std::to_string(budgets.scaled_float) + "; raise FPBL_BUDGET float=");
  }
  FlushDenormals guard;
  // c_j = -s_j/2 * scale^j = C_{j-1} scale^j, built by the ratio
  // C_j / C_{j-1} = (4j - 2)/(j + 1) in extended precision. rc is c reversed
  // so the convolution below is a contiguous dot product.
  const std::size_t M = n_max;
  std::vector<double> rc(M + 1, 0.0);
  {
    long double c = static_cast<long double>(scale) * scale;  // c_2 = C_1 scale^2
    for (std::size_t j = 2; j <= M; ++j) {
      rc[M - j] = static_cast<double>(c);
      c *= static_cast<long double>(scale) * (4.0L * j - 2.0L) / (j + 1.0L);
    }
  }
  const double shift = weight * scale;

  ColumnTable table;
  table.k_max_ = k_max;
  table.n_max_ = n_max;
  table.weight_ = weight;
  table.scale_ = scale;
  table.float_.resize(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    auto& col = table.float_[k];
    col.assign(n_max - k + 1, 0.0);
    const std::vector<double>* prev = k ? &table.float_[k - 1] : nullptr;
    for (std::size_t d = 0; d < col.size(); ++d) {
      double v = prev ? shift * (*prev)[d] : (d == 0 ? 1.0 : 0.0);
      if (d >= 2) v += dot(col.data(), rc.data() + (M - d), d - 1);
      col[d] = v;
    }
  }
  return table;
}

double growth_rate(double q) {
  if (q <= 3.0) return 4.0;
  return (q - 1.0) * (q - 1.0) / (q - 2.0);
}

std::vector<BigInt> unrestricted_weights(const Rational& q, std::size_t n) {
  require_nonnegative(q);
  const BigInt& a = q.get_num();
  const BigInt& b = q.get_den();
  const auto d = derangement_numbers(n);
  std::vector<BigInt> bpow(n + 1);
  bpow[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) bpow[i] = bpow[i - 1] * b;
  std::vector<BigInt> w(n + 1);
  BigInt binom = 1;
  BigInt apow = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    w[k] = binom * d[n - k] * apow * bpow[n - k];
    binom *= static_cast<unsigned long>(n - k);
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), k + 1);
    apow *= a;
  }
  return w;
}

Rational unrestricted_Z(const Rational& q, std::size_t n) {
  BigInt total = 0;
  for (const auto& w : unrestricted_weights(q, n)) total += w;
  Rational z(total, pow(q.get_den(), static_cast<unsigned long>(n)));
  z.canonicalize();
  return z;
}

ScaledSeries series_power(const ScaledSeries& g, unsigned r, std::size_t n_max) {
  if (g.numerators.empty() || g.numerators[0] != 1) throw std::invalid_argument("series_power expects g_0 = 1");
  if (g.size() <= n_max) throw std::invalid_argument("series_power: input series too short");
  ScaledSeries p;
  p.base = g.base;
  p.numerators.resize(n_max + 1);
  p.numerators[0] = 1;
  BigInt acc, prod;
  const long rp1 = static_cast<long>(r) + 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      const long coef = rp1 * static_cast<long>(k) - static_cast<long>(n);
      if (coef == 0) continue;
      mpz_mul(prod.get_mpz_t(), g.numerators[k].get_mpz_t(), p.numerators[n - k].get_mpz_t());
      if (coef > 0) {
        mpz_addmul_ui(acc.get_mpz_t(), prod.get_mpz_t(), static_cast<unsigned long>(coef));
      } else {
        mpz_submul_ui(acc.get_mpz_t(), prod.get_mpz_t(), static_cast<unsigned long>(-coef));
      }
    }
    mpz_divexact_ui(p.numerators[n].get_mpz_t(), acc.get_mpz_t(), n);
  }
  return p;
}

ScaledSeries factorial_moment_scaled(unsigned m, const Rational& q, std::size_t n_max, const SeriesBudgets& budgets) {
  if (m < 1) throw std::invalid_argument("factorial moment order must be >= 1");
  ScaledSeries out;
  out.base = q.get_den();
  out.numerators.assign(n_max + 1, BigInt(0));
  if (n_max < m) return out;
  const auto g = g_series_scaled(q, n_max - m, budgets);
  const auto p = series_power(g, m + 1, n_max - m);
  const BigInt lead = factorial(m) * pow(q.get_num(), m);
  for (std::size_t n = m; n <= n_max; ++n) out.numerators[n] = lead * p.numerators[n - m];
  return out;
}

SeriesTable factorial_moment_series(unsigned m, const Rational& q, std::size_t n_max, const SeriesBudgets& budgets) {
  auto scaled = factorial_moment_scaled(m, q, n_max, budgets);
  std::vector<Rational> v;
  v.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) v.push_back(scaled.value(n));
  return SeriesTable{"G_" + std::to_string(m) + "(z,q)", q, SeriesMode::exact_eval, std::move(v)};
}

}  // namespace fpbl
