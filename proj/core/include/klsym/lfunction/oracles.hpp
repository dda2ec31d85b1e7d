#pragma once

#include <complex>
#include <vector>

namespace klsym {

// Hecke eigenvalues a_1..a_N of the weight 4, level 6 newform
// q prod_{n>=1} ((1-q^n)(1-q^{2n})(1-q^{3n})(1-q^{6n}))^2,
// expanded by sparse pentagonal-number products. Entry [n] is a_n for
// 1 <= n <= N; entry [0] is unused.
std::vector<long> eta_oracle_level6_weight4(long N);

// L(chi_3, s) for the quadratic character mod 3 (period 1, -1, 0), by
// Hurwitz zeta sums with Euler-Maclaurin tail corrections. About 13
// significant digits on moderate bands (|Re s| <= 8, |Im s| <= 10); the
// two Hurwitz pole terms are combined, so s = 1 is regular.
std::complex<double> dirichlet_L_chi3(std::complex<double> s);

}  // namespace klsym
