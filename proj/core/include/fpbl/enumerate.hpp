#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "fpbl/permutation.hpp"

namespace fpbl {

struct EnumerationLimits {
  std::size_t avoider_cap = 12;       ///< S_n(tau): Catalan(12) = 208012 elements.
  std::size_t unrestricted_cap = 10;  ///< S_n: 10! = 3628800 elements.
};

/// Single-consumer stream over S_n, or over S_n(tau) when a pattern is given.
/// Prefixes that already contain tau are pruned, so the cost is proportional
/// to the number of avoiding prefixes rather than n!.
class AvoiderStream {
 public:
  /// Throws Refusal when n exceeds the applicable cap.
  AvoiderStream(std::size_t n, std::optional<Pattern3> tau, EnumerationLimits limits = {});

  /// Next permutation in lexicographic order, or nullopt when exhausted.
  std::optional<Permutation> next();

 private:
  bool extends(Permutation::value_type v) const;

  std::size_t n_;
  std::optional<Pattern3> tau_;
  std::array<bool, 3> order_{};  // tau_0<tau_1, tau_0<tau_2, tau_1<tau_2
  std::vector<Permutation::value_type> prefix_;
  std::vector<Permutation::value_type> candidate_;  // next value to try per depth
  std::vector<bool> used_;
  bool done_ = false;
};

void for_each_avoider(std::size_t n, std::optional<Pattern3> tau, const std::function<void(const Permutation&)>& visit,
                      EnumerationLimits limits = {});

std::vector<Permutation> enumerate_avoiders(std::size_t n, std::optional<Pattern3> tau, EnumerationLimits limits = {});

/// a_{k,n} by brute force: counts[k] = #{sigma in S_n(tau) : fp(sigma) = k}, k = 0..n.
std::vector<std::size_t> fixed_point_counts(std::size_t n, std::optional<Pattern3> tau, EnumerationLimits limits = {});

}  // namespace fpbl
