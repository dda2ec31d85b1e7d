#pragma once

#include <cstdint>
#include <vector>

namespace klsym {

// Odd integers a >= 1 with a*p <= k, split by the parity of ord_p(a):
// plus collects odd ord_p(a), minus collects even. Always
// #plus + #minus = floor(k/2p + 1/2).
struct ThetaSets {
  int k = 0;
  std::uint64_t p = 0;
  std::vector<long> plus, minus;
};

// Requires k odd and p an odd prime.
ThetaSets theta_sets(int k, std::uint64_t p);

}  // namespace klsym
