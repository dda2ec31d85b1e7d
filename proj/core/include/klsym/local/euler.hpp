#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "klsym/arith/intpoly.hpp"
#include "klsym/moments/moments.hpp"

namespace klsym {

// Outcome of a single verification; `detail` explains a failure.
struct CheckReport {
  bool passed = false;
  std::string detail;
};

// deg Z_k(p;T):
//   k odd,  p >= 3: (k+1)/2 - floor(k/2p + 1/2)
//   k odd,  p  = 2: (k+1)/2
//   k even, p >= 3: k/2 - floor(k/2p)
//   k even, p  = 2: floor((k+2)/4)
int degree_Z(int k, std::uint64_t p);

// Z_k(p;T) = exp(sum m_2^k(p^n) T^n / n) truncated at the predicted degree.
// The degree of the result is validated against degree_Z.
IntPolynomial zeta_poly(int k, std::uint64_t p, MomentTable& table);

// Full trivial cofactor of Z_k(p;T): (1-T) for odd k; (1-T)R_k(p;T) for
// even k and odd p; the explicit 2-adic product for even k at p=2.
IntPolynomial trivial_factor(int k, std::uint64_t p);

// Multiplicities (a_k, b_k) of the reciprocal roots 2^{k/2} and -2^{k/2}
// in the trivial part of Z_k(2;T); k even. Periodic in k mod 24 up to the
// common floor(k/24) offset.
std::pair<unsigned, unsigned> two_adic_trivial_multiplicities(int k);

// M_k(p;T) = Z_k(p;T) / trivial_factor(k,p), exact in Z[T].
IntPolynomial mid_poly(int k, std::uint64_t p, MomentTable& table);

// M_k(p;T) built from deg-M moments only, bypassing the full Z. Subtracts
// the power sums of the trivial factor's reciprocal roots before the
// exponential. Cheaper whenever deg M < deg Z.
IntPolynomial mid_poly_direct(int k, std::uint64_t p, MomentTable& table);

// Weil certification of M: exact coefficient reciprocity
// a_d * a_j = a_{d-j} * p^{(k+1)j} for all j, a_d^2 = p^{(k+1)d}, plus
// (unless disabled) a floating-point check that every reciprocal root has
// modulus p^{(k+1)/2} within 1e-8 relative.
CheckReport weil_certify(const IntPolynomial& M, int k, std::uint64_t p,
                         bool with_numeric_witness = true);

// Reciprocal roots of P(T) = prod (1 - gamma_i T), by Durand-Kerner on the
// reversed polynomial. P(0) must be 1.
std::vector<std::complex<double>> reciprocal_roots(const IntPolynomial& P);

struct MomentPrediction {
  mpz_class predicted;
  mpz_class enumerated;
  bool match = false;
};

// Predicts m_2^k(p^{d+1}) from Z via Newton power sums and enumerates it
// independently. Throws BudgetExceeded when p^{d+1} is out of reach.
MomentPrediction predict_next_moment(const IntPolynomial& Z, int k, std::uint64_t p,
                                     MomentTable& table);

// For unramified p (p > k odd, 2p > k even, or p=2 with k odd):
// -coeff_T(M) = -m_2^k(p) - 1 - [4|k] p^{k/2}.
CheckReport trace_identity_check(int k, std::uint64_t p, const IntPolynomial& M,
                                 MomentTable& table);

bool is_unramified(int k, std::uint64_t p);

struct EulerFactorRecord {
  int k = 0;
  std::uint64_t p = 0;
  IntPolynomial Z, R, M;
  std::vector<mpz_class> moments;
  std::map<std::string, bool> checks;

  bool all_passed() const;
};

struct EulerFarmOptions {
  bool run_predict = true;     // skipped silently when the budget forbids it
  bool run_numeric_weil = true;
};

// Computes Z, R, M for one (k, p) and runs the whole certification battery:
// degree, exact divisibility, Weil reciprocity/purity, trace identity when
// unramified, and the next-moment prediction when affordable.
EulerFactorRecord build_euler_record(int k, std::uint64_t p, MomentTable& table,
                                     const EulerFarmOptions& opts = {});

}  // namespace klsym
