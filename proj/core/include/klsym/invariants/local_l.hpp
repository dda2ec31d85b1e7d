#pragma once

#include <cstdint>

#include "klsym/arith/intpoly.hpp"
#include "klsym/invariants/theta.hpp"

namespace klsym {

// Local data of L_k at one prime: the reciprocal of the local L-factor,
// the conductor exponent, and whether the values rest on a conjecture.
struct LocalFactorData {
  int k = 0;
  std::uint64_t p = 0;
  IntPolynomial inverse_factor;
  int conductor_exponent = 0;
  bool conjectural = false;
};

// Odd k. For odd p <= k the inverse factor is
//   M * prod_{a in theta_plus} (1 - ((-1)^{(1+ap)/2} 2a' / p) p^{m+1} T)
// with m = (k-1)/2 and a' the prime-to-p part of a; the conductor exponent
// is #theta_minus. For p = 2, and for odd p > k, the representation is
// unramified and the factor is M itself.
LocalFactorData bad_local_factor_odd_k(int k, std::uint64_t p, const IntPolynomial& M);

// Even k, odd p. Inverse factor
//   (1 - p^{k/2}T)^{floor(k/2p)} * M                       if p = 1 mod 4,
//   (1 + p^{k/2}T)^{n}(1 - p^{k/2}T)^{floor(k/2p) - n} * M if p = 3 mod 4,
// with n = floor(k/4p + 1/2); conductor exponent floor(k/2p).
LocalFactorData local_factor_even_k(int k, std::uint64_t p, const IntPolynomial& M);

// Even k, p = 2: the conjectural inverse factor
//   (1 - 2^{k/2}T)^{floor(k/8)} (1 + 2^{k/2}T)^{b_k} * M2
// whose degree must come out as (k-2)/2 - [4|k] - floor(k/6).
LocalFactorData conjectural_2_factor_even(int k, const IntPolynomial& M2);

}  // namespace klsym
