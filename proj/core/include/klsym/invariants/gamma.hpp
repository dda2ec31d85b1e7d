#pragma once

#include <vector>

namespace klsym {

// Archimedean factor pi^{-ms/2} prod_{j=1}^m Gamma((s-j)/2), equivalently
// prod_j Gamma_R(s-j) up to a constant, with Gamma_R(s) = pi^{-s/2}Gamma(s/2).
struct GammaFactor {
  int m = 0;
  std::vector<int> shifts;  // always {1, ..., m}
};

// Computes m = floor((k-1)/2) - [4|k] and cross-checks it against the
// shift multiset produced by the Hodge-theoretic recipe applied to the
// middle Hodge numbers: a pair (p,q), p < q, of weight w contributes
// Gamma_C(s-p) = Gamma_R(s-p)Gamma_R(s-p+1), and a middle class (w/2, w/2)
// (present when k = 3 mod 4, where complex conjugation acts by -1)
// contributes Gamma_R(s - w/2 + 1). Equality of shift multisets pins the
// factor up to A*B^s with rational B; a mismatch raises RecipeMismatch.
GammaFactor gamma_factor(int k);

}  // namespace klsym
