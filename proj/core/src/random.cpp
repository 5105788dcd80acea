#include "fpbl/random.hpp"

#include <stdexcept>
#include <vector>

namespace fpbl {

namespace {

constexpr std::uint64_t kM0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kM1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kW0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kW1 = 0xBB67AE8584CAA73BULL;

__extension__ using u128 = unsigned __int128;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
  const u128 p = static_cast<u128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}

}  // namespace

std::array<std::uint64_t, 4> philox4x64(std::array<std::uint64_t, 4> ctr, std::array<std::uint64_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    std::uint64_t hi0, lo0, hi1, lo1;
    mulhilo(kM0, ctr[0], hi0, lo0);
    mulhilo(kM1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kW0;
    key[1] += kW1;
  }
  return ctr;
}

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream_id) noexcept : key_{seed, stream_id} {}

RandomSource RandomSource::substream(std::uint64_t index) const noexcept {
  RandomSource r(key_[0], key_[1]);
  // Substream 0 is the parent itself.
  r.substream_ = index + 1;
  return r;
}

void RandomSource::refill() noexcept {
  buffer_ = philox4x64({block_, substream_, 0, 0}, key_);
  ++block_;
  pos_ = 0;
}

RandomSource::result_type RandomSource::operator()() noexcept {
  if (pos_ == 4) refill();
  return buffer_[pos_++];
}

bool RandomSource::bit() noexcept {
  if (bits_left_ == 0) {
    bits_ = (*this)();
    bits_left_ = 64;
  }
  const bool b = bits_ & 1u;
  bits_ >>= 1;
  --bits_left_;
  return b;
}

std::uint64_t RandomSource::below(std::uint64_t bound) noexcept {
  u128 m = static_cast<u128>((*this)()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<u128>((*this)()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

BigInt RandomSource::below(const BigInt& bound) {
  if (sgn(bound) <= 0) throw std::invalid_argument("below: bound must be positive");
  if (bound.fits_ulong_p()) return BigInt(below(static_cast<std::uint64_t>(bound.get_ui())));
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const unsigned top_bits = static_cast<unsigned>(bits - 64 * (words - 1));
  const std::uint64_t top_mask = top_bits == 64 ? ~0ULL : ((1ULL << top_bits) - 1);
  std::vector<std::uint64_t> limbs(words);
  BigInt x;
  do {
    for (auto& w : limbs) w = (*this)();
    limbs.back() &= top_mask;  // most significant word last
    mpz_import(x.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, limbs.data());
  } while (x >= bound);
  return x;
}

double RandomSource::uniform01() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

bool RandomSource::bernoulli(const Rational& p) {
  if (sgn(p) < 0 || p > 1) throw std::invalid_argument("bernoulli: p must lie in [0, 1]");
  if (sgn(p) == 0) return false;
  if (p == 1) return true;
  // Compare U = 0.u1u2... with p = 0.p1p2... bit by bit; U < p iff at the
  // first differing bit u_i = 0 and p_i = 1.
  const mpz_class& den = p.get_den();
  if (den.fits_ulong_p() && den.get_ui() < (1UL << 62)) {
    const std::uint64_t d = den.get_ui();
    std::uint64_t r = p.get_num().get_ui();
    for (;;) {
      r <<= 1;
      const bool pb = r >= d;
      if (pb) r -= d;
      const bool ub = bit();
      if (ub != pb) return pb;
    }
  }
  BigInt r = p.get_num();
  for (;;) {
    r <<= 1;
    const bool pb = r >= den;
    if (pb) r -= den;
    const bool ub = bit();
    if (ub != pb) return pb;
  }
}

}  // namespace fpbl
