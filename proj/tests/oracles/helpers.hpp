#pragma once

#include <string>
#include <vector>

#include "brute_force.hpp"
#include "fpbl/permutation.hpp"

namespace oracle {

inline Perm pattern(fpbl::Pattern3 tau) {
  Perm p;
  for (char c : fpbl::to_string(tau)) p.push_back(static_cast<unsigned>(c - '0'));
  return p;
}

inline fpbl::Permutation to_fpbl(const Perm& p) {
  return fpbl::Permutation(std::vector<fpbl::Permutation::value_type>(p.begin(), p.end()));
}

}  // namespace oracle
