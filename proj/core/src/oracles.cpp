#include "klsym/lfunction/oracles.hpp"

#include <cmath>
#include <cstdint>

#include "klsym/error.hpp"

namespace klsym {

namespace {

// Exponent-coefficient pairs of prod_{n>=1}(1 - q^{mn}) below `bound`,
// from the pentagonal expansion sum_j (-1)^j q^{m j(3j-1)/2}.
std::vector<std::pair<long, int>> pentagonal_terms(long m, long bound) {
  std::vector<std::pair<long, int>> out{{0, 1}};
  for (long j = 1;; ++j) {
    long lo = m * (j * (3 * j - 1) / 2);
    long hi = m * (j * (3 * j + 1) / 2);
    if (lo >= bound) break;
    int sign = (j % 2 == 0) ? 1 : -1;
    out.emplace_back(lo, sign);
    if (hi < bound) out.emplace_back(hi, sign);
  }
  return out;
}

}  // namespace

std::vector<long> eta_oracle_level6_weight4(long N) {
  check(N >= 1, errc::precondition, "N >= 1 required");
  // Coefficients of the eta product through q^{N-1}; the leading q of the
  // newform shifts everything by one at the end.
  std::vector<long> f(N, 0);
  f[0] = 1;
  for (long m : {1, 1, 2, 2, 3, 3, 6, 6}) {
    std::vector<long> g(N, 0);
    for (auto [e, sign] : pentagonal_terms(m, N)) {
      if (sign > 0)
        for (long i = 0; i + e < N; ++i) g[i + e] += f[i];
      else
        for (long i = 0; i + e < N; ++i) g[i + e] -= f[i];
    }
    f = std::move(g);
  }
  std::vector<long> a(N + 1, 0);
  for (long n = 1; n <= N; ++n) a[n] = f[n - 1];
  return a;
}

namespace {

using cdouble = std::complex<double>;

// B_{2j} / (2j)! for the Euler-Maclaurin tail.
constexpr double kBernoulliOverFactorial[] = {
    8.3333333333333333e-02,  -1.3888888888888889e-03, 3.3068783068783069e-05,
    -8.2671957671957672e-07, 2.0876756987868099e-08,  -5.2841901386874932e-10,
    1.3382536530684679e-11,  -3.3896802963225829e-13, 8.5860620562778446e-15,
    -2.1748686985580619e-16,
};

// (A^{z} - B^{z}) computed as A^{z} (1 - e^{z log(B/A)}) without
// cancellation; regular at z = 0.
cdouble power_difference(double A, double B, cdouble z) {
  cdouble x = z * std::log(B / A);
  cdouble em1;
  if (std::abs(x) < 1e-4)
    em1 = x * (1.0 + x * (0.5 + x / 6.0));
  else
    em1 = std::exp(x) - 1.0;
  return -std::exp(z * std::log(A)) * em1;
}

}  // namespace

std::complex<double> dirichlet_L_chi3(std::complex<double> s) {
  // L(chi_3, s) = 3^{-s} (zeta(s, 1/3) - zeta(s, 2/3)). The Hurwitz parts
  // are summed together so their simple poles at s = 1 cancel exactly.
  constexpr int M = 24;
  constexpr int J = 10;
  const double a1 = 1.0 / 3.0, a2 = 2.0 / 3.0;

  cdouble sum = 0.0;
  for (int n = 0; n < M; ++n) sum += power_difference(n + a1, n + a2, -s);

  // Pole terms ((M+a)^{1-s}) / (s - 1) combined: the difference of powers
  // carries a factor (s - 1) cancelling the denominator, so with
  // z = 1 - s, x = z log(r), r = (M+a2)/(M+a1), the pair contributes
  // (M+a1)^{z} log(r) (e^{x} - 1)/x, regular at s = 1.
  cdouble z = 1.0 - s;
  double logr = std::log((M + a2) / (M + a1));
  cdouble x = z * logr;
  cdouble em1_over_x;
  if (std::abs(x) < 1e-4)
    em1_over_x = 1.0 + x * (0.5 + x * (1.0 / 6.0 + x / 24.0));
  else
    em1_over_x = (std::exp(x) - 1.0) / x;
  sum += std::exp(z * std::log(M + a1)) * logr * em1_over_x;

  sum += 0.5 * power_difference(M + a1, M + a2, -s);

  cdouble poch = s;
  for (int j = 1; j <= J; ++j) {
    sum += kBernoulliOverFactorial[j - 1] * poch *
           power_difference(M + a1, M + a2, -s - (2.0 * j - 1.0));
    poch *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
  }

  return std::exp(-s * std::log(3.0)) * sum;
}

}  // namespace klsym
