#include "klsym/lfunction/lspec.hpp"

#include <algorithm>
#include <sstream>

#include "klsym/arith/numtheory.hpp"
#include "klsym/error.hpp"
#include "klsym/invariants/conductor.hpp"
#include "klsym/invariants/gamma.hpp"
#include "klsym/invariants/local_l.hpp"
#include "klsym/lfunction/oracles.hpp"
#include "klsym/local/euler.hpp"

namespace klsym {

namespace {

LFunctionSpec skeleton(int k) {
  LFunctionSpec spec;
  spec.k = k;
  spec.weight = k + 1;
  spec.reflection = k + 2;
  spec.gamma_shifts = gamma_factor(k).shifts;
  return spec;
}

}  // namespace

LFunctionSpec lfunction_spec_trivial(int k, std::uint64_t pmax) {
  check(k == 1 || k == 2 || k == 4, errc::precondition,
        "only k = 1, 2, 4 have an identically trivial middle part");
  LFunctionSpec spec = skeleton(k);
  spec.conductor = 1;
  spec.sign = +1;
  if (k != 1) spec.conjectural.insert("sign");
  spec.pmax = pmax;
  for (std::uint64_t p : primes_upto(pmax)) spec.euler[p] = IntPolynomial::one();
  return spec;
}

LFunctionSpec lfunction_spec_k3(std::uint64_t pmax) {
  LFunctionSpec spec = skeleton(3);
  spec.conductor = 3;
  spec.sign = +1;
  spec.pmax = pmax;
  for (std::uint64_t p : primes_upto(pmax)) {
    mpz_class c1 = -chi3(p) * mpz_class(p) * mpz_class(p);
    if (c1 == 0)
      spec.euler[p] = IntPolynomial::one();
    else
      spec.euler[p] = IntPolynomial(std::vector<mpz_class>{1, c1});
  }
  return spec;
}

LFunctionSpec lfunction_spec_k6(std::uint64_t pmax, MomentTable& table,
                                const std::vector<std::uint64_t>& moment_checked) {
  LFunctionSpec spec = skeleton(6);
  Conductor cond = conductor(6);
  spec.conductor = cond.value;
  EpsilonSign eps = epsilon_sign(6);
  spec.sign = eps.sign;
  spec.conjectural = {"sign", "two_adic_factor", "two_part_of_conductor"};
  spec.pmax = pmax;

  std::vector<long> a = eta_oracle_level6_weight4(static_cast<long>(pmax));
  for (std::uint64_t p : primes_upto(pmax)) {
    if (p == 2) {
      spec.euler[2] = conjectural_2_factor_even(6, mid_poly(6, 2, table)).inverse_factor;
      continue;
    }
    if (p == 3) {
      spec.euler[3] = local_factor_even_k(6, 3, mid_poly(6, 3, table)).inverse_factor;
      continue;
    }
    mpz_class p2 = mpz_class(p) * mpz_class(p);
    spec.euler[p] = IntPolynomial(
        std::vector<mpz_class>{1, -p2 * a[p], pow_mpz(mpz_class(p), 7)});
  }

  for (std::uint64_t p : moment_checked) {
    check(p <= pmax && p > 3, errc::precondition, "checked prime outside the table");
    IntPolynomial from_moments = mid_poly(6, p, table);
    if (from_moments != spec.euler.at(p)) {
      std::ostringstream os;
      os << "moment route gives " << from_moments.str() << " at p = " << p
         << ", the eigenvalue route gives " << spec.euler.at(p).str();
      fail(errc::cross_check_failed, os.str());
    }
  }
  return spec;
}

DirichletCoefficients dirichlet_coefficients(const LFunctionSpec& spec, long N) {
  check(N >= 1, errc::precondition, "N >= 1 required");
  DirichletCoefficients out;
  out.N = N;
  out.a.assign(static_cast<std::size_t>(N) + 1, 0);
  out.a[1] = 1;

  for (std::uint64_t p : primes_upto(static_cast<std::uint64_t>(N))) {
    auto it = spec.euler.find(p);
    if (it == spec.euler.end()) {
      std::ostringstream os;
      os << "no inverse factor at p = " << p << " (spec covers p <= " << spec.pmax << ")";
      fail(errc::missing_euler_factor, os.str());
    }
    const IntPolynomial& f = it->second;
    check(f[0] == 1, errc::precondition, "inverse factor must have constant term 1");

    // 1 / f(T) = sum_j b_j T^j; b_j gives a_{p^j}.
    std::vector<mpz_class> b{1};
    std::vector<long> q_of{1};
    for (long q = static_cast<long>(p); q <= N; q *= static_cast<long>(p)) {
      std::size_t j = b.size();
      mpz_class next = 0;
      std::size_t top = std::min(j, static_cast<std::size_t>(f.degree()));
      for (std::size_t i = 1; i <= top; ++i) next -= f[i] * b[j - i];
      b.push_back(next);
      q_of.push_back(q);
    }

    // Multiplicative fill: every m coprime to p already carries its full
    // product over smaller primes.
    const long pl = static_cast<long>(p);
    for (std::size_t j = 1; j < b.size(); ++j) {
      const long q = q_of[j];
      const long mmax = N / q;
      for (long m = 1; m <= mmax; ++m) {
        if (m % pl == 0 || out.a[m] == 0) continue;
        out.a[m * q] = out.a[m] * b[j];
      }
    }
  }
  return out;
}

}  // namespace klsym
