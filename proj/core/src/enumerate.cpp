#include "fpbl/enumerate.hpp"

#include <array>
#include <string>

#include "fpbl/errors.hpp"

namespace fpbl {

using value_type = Permutation::value_type;

AvoiderStream::AvoiderStream(std::size_t n, std::optional<Pattern3> tau, EnumerationLimits limits)
    : n_(n), tau_(tau), used_(n + 2, false) {
  const std::size_t cap = tau ? limits.avoider_cap : limits.unrestricted_cap;
  if (n > cap) {
    throw Refusal("enumeration of " + std::string(tau ? "S_n(" + to_string(*tau) + ")" : "S_n") + " refused for n=" +
                  std::to_string(n) + " (cap " + std::to_string(cap) +
                  "); use the series engine for 132/321/213 or sampling for larger n");
  }
  if (tau) {
    const auto p = to_permutation(*tau);
    order_ = {p[0] < p[1], p[0] < p[2], p[1] < p[2]};
  }
  prefix_.reserve(n);
  candidate_.assign(n + 1, 1);
}

// Would appending v to the current prefix create an occurrence of tau whose
// last entry is v? Prefixes are tau-free by construction, so only triples
// ending at the new entry need checking.
bool AvoiderStream::extends(value_type v) const {
  if (!tau_) return true;
  const std::size_t k = prefix_.size();
  const bool lt02 = order_[1];
  const bool lt12 = order_[2];
  const bool lt01 = order_[0];
  for (std::size_t j = 1; j < k; ++j) {
    if ((prefix_[j] < v) != lt12) continue;
    for (std::size_t i = 0; i < j; ++i) {
      if ((prefix_[i] < v) == lt02 && (prefix_[i] < prefix_[j]) == lt01) return false;
    }
  }
  return true;
}

std::optional<Permutation> AvoiderStream::next() {
  if (done_) return std::nullopt;
  if (n_ == 0) {
    done_ = true;
    return Permutation{};
  }
  while (true) {
    const std::size_t depth = prefix_.size();
    if (depth == n_) {
      Permutation out = make_unchecked(prefix_);
      // Backtrack so the following call resumes after this leaf.
      used_[prefix_.back()] = false;
      prefix_.pop_back();
      return out;
    }
    value_type& v = candidate_[depth];
    while (v <= n_ && (used_[v] || !extends(v))) ++v;
    if (v > n_) {
      if (depth == 0) {
        done_ = true;
        return std::nullopt;
      }
      candidate_[depth] = 1;
      used_[prefix_.back()] = false;
      prefix_.pop_back();
      continue;
    }
    used_[v] = true;
    prefix_.push_back(v);
    ++v;
  }
}

void for_each_avoider(std::size_t n, std::optional<Pattern3> tau, const std::function<void(const Permutation&)>& visit,
                      EnumerationLimits limits) {
  AvoiderStream stream(n, tau, limits);
  while (auto sigma = stream.next()) visit(*sigma);
}

std::vector<Permutation> enumerate_avoiders(std::size_t n, std::optional<Pattern3> tau, EnumerationLimits limits) {
  std::vector<Permutation> out;
  for_each_avoider(n, tau, [&](const Permutation& s) { out.push_back(s); }, limits);
  return out;
}

std::vector<std::size_t> fixed_point_counts(std::size_t n, std::optional<Pattern3> tau, EnumerationLimits limits) {
  std::vector<std::size_t> counts(n + 1, 0);
  for_each_avoider(n, tau, [&](const Permutation& s) { ++counts[fixed_points(s)]; }, limits);
  return counts;
}

}  // namespace fpbl
