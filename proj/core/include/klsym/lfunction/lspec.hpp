#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "klsym/arith/intpoly.hpp"
#include "klsym/moments/moments.hpp"

namespace klsym {

// Everything needed to evaluate the completed function
//   Lambda(s) = (C/pi^m)^{s/2} prod_j Gamma((s-j)/2) prod_p L_p(s),
// where L_p(s) = 1 / euler[p](p^{-s}), together with its reflection
// Lambda(s) = sign * Lambda(reflection - s).
struct LFunctionSpec {
  int k = 0;
  int weight = 0;      // motivic weight k + 1
  int reflection = 0;  // k + 2
  mpz_class conductor; // odd k proven; even k includes the conjectured 2-part
  std::vector<int> gamma_shifts;
  int sign = +1;
  std::map<std::uint64_t, IntPolynomial> euler;  // p -> inverse factor in T = p^{-s}
  std::set<std::string> conjectural;             // names of unproven ingredients
  std::uint64_t pmax = 0;                        // every prime <= pmax is in `euler`
};

// k in {1, 2, 4}: every middle factor is 1, there are no gamma factors,
// the conductor is 1, and Lambda is identically 1.
LFunctionSpec lfunction_spec_trivial(int k, std::uint64_t pmax);

// k = 3: local factors 1 - chi3(p) p^2 T from the closed form (the moment
// route reproduces them wherever both are computed), conductor 3, one
// gamma shift, proven sign +1.
LFunctionSpec lfunction_spec_k3(std::uint64_t pmax);

// k = 6: the factor at p = 2 is the conjectured one, the factor at p = 3
// comes with M_6(3;T) from moments, and unramified factors are
// 1 - p^2 a_p T + p^7 T^2 with a_p from eta_oracle_level6_weight4. At each
// prime in `moment_checked` the oracle factor is compared with the moment
// route; disagreement raises CrossCheckFailed.
LFunctionSpec lfunction_spec_k6(std::uint64_t pmax, MomentTable& table,
                                const std::vector<std::uint64_t>& moment_checked = {5, 7, 11,
                                                                                    13});

struct DirichletCoefficients {
  long N = 0;
  std::vector<mpz_class> a;  // a[n] for 1 <= n <= N; a[0] unused

  bool operator==(const DirichletCoefficients&) const = default;
};

// Expands prod_p 1/euler[p](p^{-s}) into sum_n a_n n^{-s}: each inverse
// factor is inverted as a power series in T = p^{-s} and the prime-power
// columns are assembled multiplicatively. Exact integers.
DirichletCoefficients dirichlet_coefficients(const LFunctionSpec& spec, long N);

}  // namespace klsym
