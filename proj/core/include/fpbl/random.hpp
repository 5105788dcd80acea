#pragma once

#include <array>
#include <cstdint>

#include "fpbl/arith.hpp"

namespace fpbl {

/// Philox4x64-10 block function (Salmon et al., "Parallel random numbers: as
/// easy as 1, 2, 3"). Matches numpy's Philox bit generator.
std::array<std::uint64_t, 4> philox4x64(std::array<std::uint64_t, 4> counter, std::array<std::uint64_t, 2> key);

/// Counter-based generator keyed by (seed, stream_id). The counter is
/// (block, substream, 0, 0), so substreams of one source never overlap and
/// output depends only on (seed, stream_id, substream, position).
///
/// Satisfies UniformRandomBitGenerator. Value type; not for concurrent use.
class RandomSource {
 public:
  using result_type = std::uint64_t;

  explicit RandomSource(std::uint64_t seed, std::uint64_t stream_id = 0) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }
  result_type operator()() noexcept;

  std::uint64_t seed() const noexcept { return key_[0]; }
  std::uint64_t stream_id() const noexcept { return key_[1]; }
  std::uint64_t substream_index() const noexcept { return substream_; }

  /// Independent generator for chunk `index` of a partitioned job.
  RandomSource substream(std::uint64_t index) const noexcept;

  /// Uniform on [0, bound), bound > 0 (Lemire's multiply-and-reject).
  std::uint64_t below(std::uint64_t bound) noexcept;
  /// Uniform on [0, bound), bound > 0, exact for any size.
  BigInt below(const BigInt& bound);
  /// 53-bit uniform double on [0, 1).
  double uniform01() noexcept;
  /// Exactly Bernoulli(p) for rational p in [0, 1], by lazily comparing a
  /// uniform binary expansion against that of p.
  bool bernoulli(const Rational& p);
  bool bit() noexcept;

 private:
  void refill() noexcept;

  std::array<std::uint64_t, 2> key_;
  std::uint64_t substream_ = 0;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 4> buffer_{};
  unsigned pos_ = 4;
  std::uint64_t bits_ = 0;
  unsigned bits_left_ = 0;
};

}  // namespace fpbl
