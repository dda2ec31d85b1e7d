#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

#include "klsym/arith/intpoly.hpp"
#include "klsym/local/euler.hpp"

namespace klsym {

struct Conductor {
  mpz_class value;     // odd k: proven; even k: includes the conjectural 2-part
  mpz_class odd_part;  // proven for both parities
  int two_exponent = 0;
  bool conjectural = false;
};

// Odd k: product over odd primes of p^{#theta_minus}, cross-checked against
// the product of the squarefree parts of 1, 3, 5, ..., k. Even k: odd part
// = product over odd primes of p^{floor(k/2p)}, cross-checked against the
// product of the odd radicals of 2, 4, ..., k; the 2-exponent floor(k/6) is
// conjectural. The two routes disagreeing raises CrossCheckFailed.
Conductor conductor(int k);

struct EpsilonSign {
  int sign = +1;
  bool conjectural = false;
  // Even k only: exponent in sign = (-1)^{t_k}, and the proven local data.
  long t_k = 0;
  int sign_at_infinity = +1;                  // (-1)^{[8 | k]}
  std::map<std::uint64_t, int> local_signs;   // odd p -> (-1)^{v_p}, proven
};

// Global root number of Lambda_k: +1 proven for odd k; (-1)^{t_k} with
// t_k = floor(k/8) + sum_{p=1(4)} floor(k/2p) + sum_{p=3(4)} floor(k/4p)
//     + [8 | k]
// for even k, flagged conjectural (only the per-place components carry
// proofs).
EpsilonSign epsilon_sign(int k);

// For odd k and p > k, with d = deg M and a_d the leading coefficient:
// (-1)^d a_d = (p / k!!) p^{(k^2-1)/4}, where k!! = 3*5***k and (./.) is
// the Jacobi symbol.
CheckReport det_frobenius_check(int k, std::uint64_t p, const IntPolynomial& M);

}  // namespace klsym
