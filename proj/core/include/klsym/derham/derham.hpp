#pragma once

#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace klsym {

// Element of the lattice spanned by z^r eta_a, r >= 0, 0 <= a <= k, with
// rational coefficients. The term (r, a) is homogeneous of degree 2r + a.
struct GradedElement {
  std::map<std::pair<int, int>, mpq_class> terms;

  bool operator==(const GradedElement& o) const { return terms == o.terms; }
  bool is_zero() const;
  // Largest 2r + a over the support, -1 for zero.
  int top_degree() const;
  GradedElement& add_term(int r, int a, const mpq_class& c);
};

GradedElement monomial(int r, int a);

// z d/dz (z^r eta_a) = r z^r eta_a + (k-a) z^r eta_{a+1} + a z^{r+1} eta_{a-1}.
// The first summand preserves the degree, the other two raise it by one.
GradedElement connection_apply(const GradedElement& x, int k);

// Degree-raising part alone (the matrix part of the connection).
GradedElement connection_raising_part(const GradedElement& x, int k);
// Degree-preserving part alone (the Euler part).
GradedElement connection_euler_part(const GradedElement& x);

struct CohomologyBases {
  std::vector<GradedElement> h0;  // flat sections; provably empty
  std::vector<GradedElement> h1;  // the classes z^j eta_0, j < floor((k+1)/2)
};

// Kernel and cokernel of the connection on the lattice truncated at the
// degree bound. The kernel computation is exact (the image of a bounded
// element is bounded); the cokernel classes are certified independent and
// spanning up to degree D-2, and the verdict is required to be stable
// between D-1 and D. Throws StabilizationFailure if it is not, and
// MismatchWithTheorem if the certified basis contradicts the closed form.
CohomologyBases cohomology(int k, int degree_bound);
CohomologyBases cohomology(int k);  // degree bound 2k + 6

// For even k: sigma = sum_i (-1)^i binom(k/2, i) z^i eta_{k-2i}, which
// generates the kernel of the degree-raising part. The construction
// verifies that the raising part kills it.
GradedElement graded_kernel_generator(int k);

// For even k and r >= 0: certifies that the Euler image of z^r sigma is
// nonzero in the cokernel of the degree-raising part on its graded piece.
bool euler_image_nonzero_in_graded_cokernel(int k, int r);

struct FiltrationJumps {
  std::vector<int> computed;  // jumps derived from the filtration dimensions
  std::vector<int> full;      // first Hodge coordinates, all of them
  bool partial = false;       // even k: computed covers only p > k/2
};

// Jumps of the (irregular) Hodge filtration on H^1. For odd k the basis
// dimension formula dim F^p = floor((k+1-p)/2) + 1 is valid everywhere;
// for even k only for p > k/2, and the remaining jumps are read off the
// Hodge numbers. Disagreement on the overlap throws MismatchWithTheorem.
FiltrationJumps filtration_jumps(int k);

}  // namespace klsym
