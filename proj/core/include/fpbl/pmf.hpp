#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fpbl/arith.hpp"
#include "fpbl/enumerate.hpp"
#include "fpbl/permutation.hpp"
#include "fpbl/series.hpp"

namespace fpbl {

/// Selects P_n^q (no pattern), P_n^tau (q = 1) or P_n^{q,tau}.
struct MeasureSpec {
  std::size_t n = 0;
  Rational q = 1;
  std::optional<Pattern3> tau;

  /// Throws std::invalid_argument unless q > 0.
  void validate() const;
  std::string describe() const;
};

/// True for 132, 321 and 213, the classes covered by the series engine.
bool has_series(Pattern3 tau) noexcept;

enum class PmfMode { exact, scaled_float, monte_carlo };
enum class Provenance { series, enumeration, monte_carlo };

std::string to_string(PmfMode mode);
std::string to_string(Provenance p);
PmfMode parse_pmf_mode(const std::string& text);

struct MonteCarloInfo {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
  std::size_t samples = 0;
};

/// Law of fp(Pi) on {0..n}. Exact pmfs carry canonical rationals summing to
/// exactly 1; float pmfs carry doubles normalised to 1 within 1e-12.
class FixedPointPMF {
 public:
  static FixedPointPMF from_exact(MeasureSpec spec, std::vector<Rational> weights, Provenance provenance);
  static FixedPointPMF from_float(MeasureSpec spec, std::vector<double> weights, Provenance provenance,
                                  std::optional<MonteCarloInfo> mc = std::nullopt);

  const MeasureSpec& spec() const noexcept { return spec_; }
  std::size_t n() const noexcept { return spec_.n; }
  bool is_exact() const noexcept { return std::holds_alternative<std::vector<Rational>>(weights_); }
  Provenance provenance() const noexcept { return provenance_; }
  const std::optional<MonteCarloInfo>& monte_carlo() const noexcept { return mc_; }

  /// Throws std::logic_error on float pmfs.
  const std::vector<Rational>& exact_weights() const;
  /// Probabilities as doubles, exact ones rounded.
  std::vector<double> probabilities() const;
  double probability(std::size_t k) const;

 private:
  FixedPointPMF() = default;
  MeasureSpec spec_;
  std::variant<std::vector<Rational>, std::vector<double>> weights_;
  Provenance provenance_ = Provenance::series;
  std::optional<MonteCarloInfo> mc_;
};

struct PmfOptions {
  SeriesBudgets budgets = SeriesBudgets::from_environment();
  EnumerationLimits limits;
  /// Monte-Carlo mode only.
  std::size_t samples = 1000000;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

/// Law of fp(Pi) under the measure in `spec`.
///
///  - exact: series engine for 132/321/213, closed form without a pattern,
///    enumeration for 123/231/312 up to the enumeration cap;
///  - scaled-float: weighted column series for 132/321/213, rounded closed
///    form without a pattern;
///  - monte-carlo: uniform avoiders (or P_n^q directly without a pattern),
///    reweighted by q^k when q != 1.
///
/// Unsupported combinations throw Refusal naming the legal alternatives.
FixedPointPMF fp_pmf(const MeasureSpec& spec, PmfMode mode, const PmfOptions& options = {});

/// Exact pmf from counts a_{k,n}: weight a_{k,n} q^k normalised.
FixedPointPMF pmf_from_counts(const MeasureSpec& spec, const std::vector<BigInt>& counts, Provenance provenance);

/// Tilts by q^k and renormalises; exact stays exact. The result's spec has q
/// multiplied in.
FixedPointPMF reweight(const FixedPointPMF& pmf, const Rational& q);

}  // namespace fpbl
