#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fpbl/permutation.hpp"
#include "fpbl/random.hpp"

namespace fpbl {

/// Steps +1 (up) and -1 (down); valid paths never dip below zero and end at 0.
struct DyckPath {
  std::vector<std::int8_t> steps;

  std::size_t semilength() const noexcept { return steps.size() / 2; }
  bool valid() const noexcept;
  /// "UDUUDD" form.
  std::string to_string() const;
  static DyckPath parse(std::string_view text);

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;
};

/// Uniform over the Catalan(n) paths of semilength n. A uniform arrangement
/// of n+1 ups and n downs is rotated to start just after the last minimum of
/// its prefix sums (cycle lemma), and the leading up-step is dropped.
DyckPath uniform_dyck(std::size_t n, RandomSource& rng);

/// All paths of semilength n in lexicographic order (U < D). For tests.
std::vector<DyckPath> all_dyck_paths(std::size_t n);

/// Bijection onto S_n(321). Walking the path, a peak preceded by h ups and d
/// downs puts the value h at position d+1; these are the left-to-right
/// maxima. The remaining values fill the remaining positions in increasing
/// order.
Permutation dyck_to_321(const DyckPath& path);

/// Bijection onto S_n(132) by first-return decomposition. For P = U A D B
/// with A of semilength i, the image is alpha n beta where alpha is the image
/// of A shifted onto the values n-i..n-1 and beta is the image of B on
/// 1..n-1-i.
Permutation dyck_to_132(const DyckPath& path);

}  // namespace fpbl
