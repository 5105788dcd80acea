#include "fpbl/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace fpbl {

using value_type = Permutation::value_type;

Permutation::Permutation(std::vector<value_type> entries) : entries_(std::move(entries)) {
  std::vector<bool> seen(entries_.size() + 1, false);
  for (value_type v : entries_) {
    if (v == 0 || v > entries_.size() || seen[v]) {
      throw std::invalid_argument("not a permutation of 1..n: " + to_string());
    }
    seen[v] = true;
  }
}

Permutation make_unchecked(std::vector<value_type> entries) { return Permutation(std::move(entries), Permutation::Unchecked{}); }

Permutation Permutation::identity(std::size_t n) {
  std::vector<value_type> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<value_type>(i + 1);
  return make_unchecked(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<value_type> e;
  bool has_space = text.find_first_of(" \t,") != std::string_view::npos;
  if (!has_space) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad permutation text: " + std::string(text));
      e.push_back(static_cast<value_type>(c - '0'));
    }
    return Permutation(std::move(e));
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
    if (i == text.size()) break;
    value_type v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc{}) throw std::invalid_argument("bad permutation text: " + std::string(text));
    e.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return Permutation(std::move(e));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::string to_string(Pattern3 tau) {
  switch (tau) {
    case Pattern3::p123: return "123";
    case Pattern3::p132: return "132";
    case Pattern3::p213: return "213";
    case Pattern3::p231: return "231";
    case Pattern3::p312: return "312";
    case Pattern3::p321: return "321";
  }
  return "?";
}

Pattern3 parse_pattern3(std::string_view text) {
  for (Pattern3 p : kAllPatterns3) {
    if (text == to_string(p)) return p;
  }
  throw std::invalid_argument("unknown length-3 pattern '" + std::string(text) + "' (expected 123, 132, 213, 231, 312 or 321)");
}

Permutation to_permutation(Pattern3 tau) { return Permutation::parse(to_string(tau)); }

std::size_t fixed_points(std::span<const value_type> entries) noexcept {
  std::size_t count = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) count += entries[i] == i + 1;
  return count;
}

std::size_t fixed_points(const Permutation& sigma) noexcept { return fixed_points(sigma.entries()); }

namespace {

bool order_isomorphic(const Permutation& sigma, const std::vector<std::size_t>& idx, const Permutation& tau) {
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if ((sigma[idx[a]] < sigma[idx[b]]) != (tau[a] < tau[b])) return false;
    }
  }
  return true;
}

bool search(const Permutation& sigma, const Permutation& tau, std::vector<std::size_t>& idx, std::size_t start) {
  if (idx.size() == tau.size()) return order_isomorphic(sigma, idx, tau);
  std::size_t remaining = tau.size() - idx.size();
  for (std::size_t i = start; i + remaining <= sigma.size(); ++i) {
    idx.push_back(i);
    if (search(sigma, tau, idx, i + 1)) return true;
    idx.pop_back();
  }
  return false;
}

// Stack scan for an occurrence of 132 in the sequence get(0..n-1), i.e.
// i<j<k with x_i < x_k < x_j. Scans right to left; `third` holds the
// largest value popped so far, which always has a larger value to its left.
template <typename Get>
bool has_132(std::size_t n, Get get) {
  std::vector<value_type> stack;
  stack.reserve(n);
  value_type third = 0;
  for (std::size_t t = n; t-- > 0;) {
    value_type x = get(t);
    if (x < third) return true;
    while (!stack.empty() && stack.back() < x) {
      third = stack.back();
      stack.pop_back();
    }
    stack.push_back(x);
  }
  return false;
}

// Single pass: smallest tail of increasing runs of length 1 and 2.
template <typename Get>
bool has_123(std::size_t n, Get get) {
  value_type first = std::numeric_limits<value_type>::max();
  value_type second = std::numeric_limits<value_type>::max();
  for (std::size_t t = 0; t < n; ++t) {
    value_type x = get(t);
    if (x <= first) {
      first = x;
    } else if (x <= second) {
      second = x;
    } else {
      return true;
    }
  }
  return false;
}

}  // namespace

bool contains_pattern(const Permutation& sigma, const Permutation& tau) {
  if (tau.size() < 2) throw std::invalid_argument("pattern must have length >= 2");
  if (tau.size() > sigma.size()) return false;
  std::vector<std::size_t> idx;
  idx.reserve(tau.size());
  return search(sigma, tau, idx, 0);
}

bool avoids(std::span<const value_type> e, Pattern3 tau) noexcept {
  const std::size_t n = e.size();
  const auto top = static_cast<value_type>(n + 1);
  auto direct = [&](std::size_t t) { return e[t]; };
  auto rev = [&](std::size_t t) { return e[n - 1 - t]; };
  auto comp = [&](std::size_t t) { return top - e[t]; };
  auto revcomp = [&](std::size_t t) { return top - e[n - 1 - t]; };
  switch (tau) {
    case Pattern3::p123: return !has_123(n, direct);
    case Pattern3::p321: return !has_123(n, comp);
    case Pattern3::p132: return !has_132(n, direct);
    case Pattern3::p231: return !has_132(n, rev);      // reverse(231) = 132
    case Pattern3::p312: return !has_132(n, comp);     // complement(312) = 132
    case Pattern3::p213: return !has_132(n, revcomp);  // reverse-complement(213) = 132
  }
  return false;
}

Permutation apply(const Permutation& sigma, Symmetry kind) {
  const std::size_t n = sigma.size();
  const auto top = static_cast<value_type>(n + 1);
  std::vector<value_type> out(n);
  switch (kind) {
    case Symmetry::reverse:
      for (std::size_t i = 0; i < n; ++i) out[i] = sigma[n - 1 - i];
      break;
    case Symmetry::complement:
      for (std::size_t i = 0; i < n; ++i) out[i] = top - sigma[i];
      break;
    case Symmetry::inverse:
      for (std::size_t i = 0; i < n; ++i) out[sigma[i] - 1] = static_cast<value_type>(i + 1);
      break;
    case Symmetry::reverse_complement:
      for (std::size_t i = 0; i < n; ++i) out[i] = top - sigma[n - 1 - i];
      break;
  }
  return make_unchecked(std::move(out));
}

}  // namespace fpbl
