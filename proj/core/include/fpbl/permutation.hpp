#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fpbl {

/// A permutation of {1,...,n} in one-line notation, 1-based values.
/// Immutable once constructed; construction validates the bijection.
class Permutation {
 public:
  using value_type = std::uint32_t;

  Permutation() = default;
  /// Throws std::invalid_argument unless `entries` is a rearrangement of 1..n.
  explicit Permutation(std::vector<value_type> entries);

  static Permutation identity(std::size_t n);

  /// Accepts "3 1 2 4 5" (space separated) or the compact "31245" form when
  /// every entry is a single digit.
  static Permutation parse(std::string_view text);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  /// Value at 0-based position i.
  value_type operator[](std::size_t i) const noexcept { return entries_[i]; }
  std::span<const value_type> entries() const noexcept { return entries_; }

  /// Space-separated one-line notation, e.g. "3 1 2 4 5".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<value_type> entries, Unchecked) : entries_(std::move(entries)) {}
  friend Permutation make_unchecked(std::vector<value_type> entries);

  std::vector<value_type> entries_;
};

/// Skips validation. For internal producers that guarantee a bijection.
Permutation make_unchecked(std::vector<Permutation::value_type> entries);

/// The six permutation patterns of length three.
enum class Pattern3 : std::uint8_t { p123, p132, p213, p231, p312, p321 };

inline constexpr Pattern3 kAllPatterns3[] = {Pattern3::p123, Pattern3::p132, Pattern3::p213,
                                             Pattern3::p231, Pattern3::p312, Pattern3::p321};

std::string to_string(Pattern3 tau);
/// "123", "132", ... Throws std::invalid_argument otherwise.
Pattern3 parse_pattern3(std::string_view text);
Permutation to_permutation(Pattern3 tau);

/// Number of i with sigma_i = i.
std::size_t fixed_points(const Permutation& sigma) noexcept;
std::size_t fixed_points(std::span<const Permutation::value_type> entries) noexcept;

/// Naive subsequence search for an arbitrary pattern (|tau| >= 2); the
/// reference oracle for `avoids`. Returns false when |tau| > |sigma|.
bool contains_pattern(const Permutation& sigma, const Permutation& tau);

/// Linear single-pass avoidance test specialised per pattern.
bool avoids(std::span<const Permutation::value_type> entries, Pattern3 tau) noexcept;
inline bool avoids(const Permutation& sigma, Pattern3 tau) noexcept { return avoids(sigma.entries(), tau); }

enum class Symmetry { reverse, complement, inverse, reverse_complement };

Permutation apply(const Permutation& sigma, Symmetry kind);

}  // namespace fpbl
