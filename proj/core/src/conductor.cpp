#include "klsym/invariants/conductor.hpp"

#include <sstream>

#include "klsym/arith/numtheory.hpp"
#include "klsym/error.hpp"
#include "klsym/invariants/theta.hpp"

namespace klsym {

namespace {

// Product of the odd primes dividing n.
mpz_class odd_radical(std::uint64_t n) {
  mpz_class out = 1;
  for (std::uint64_t q = 3; q * q <= n; q += 2) {
    if (n % q) continue;
    out *= q;
    while (n % q == 0) n /= q;
  }
  while (n % 2 == 0) n /= 2;
  if (n > 1) out *= n;
  return out;
}

}  // namespace

Conductor conductor(int k) {
  check(k >= 1, errc::precondition, "conductor needs k >= 1");
  Conductor out;
  mpz_class by_primes = 1, by_parts = 1;

  if (k % 2 == 1) {
    for (std::uint64_t p : primes_upto(static_cast<std::uint64_t>(k)))
      if (p != 2)
        by_primes *= pow_mpz(mpz_class(p),
                             static_cast<unsigned>(theta_sets(k, p).minus.size()));
    for (long j = 1; j <= k; j += 2)
      by_parts *= squarefree_part(static_cast<std::uint64_t>(j));
    out.value = by_primes;
    out.odd_part = by_primes;
  } else {
    for (std::uint64_t p : primes_upto(static_cast<std::uint64_t>(k)))
      if (p != 2) by_primes *= pow_mpz(mpz_class(p), static_cast<unsigned>(k / (2 * p)));
    for (long j = 2; j <= k; j += 2) by_parts *= odd_radical(static_cast<std::uint64_t>(j));
    out.odd_part = by_primes;
    out.two_exponent = k / 6;
    out.value = by_primes * pow_mpz(mpz_class(2), static_cast<unsigned>(out.two_exponent));
    out.conjectural = true;
  }

  if (by_primes != by_parts) {
    std::ostringstream os;
    os << "conductor routes disagree at k = " << k << ": " << by_primes << " vs " << by_parts;
    fail(errc::cross_check_failed, os.str());
  }
  return out;
}

EpsilonSign epsilon_sign(int k) {
  check(k >= 1, errc::precondition, "epsilon_sign needs k >= 1");
  EpsilonSign out;
  if (k % 2 == 1) return out;

  out.conjectural = true;
  out.t_k = k / 8 + (k % 8 == 0 ? 1 : 0);
  out.sign_at_infinity = (k % 8 == 0) ? -1 : +1;
  for (std::uint64_t p : primes_upto(static_cast<std::uint64_t>(k))) {
    if (p == 2) continue;
    long vp = (p % 4 == 1) ? static_cast<long>(k / (2 * p)) : static_cast<long>(k / (4 * p));
    out.t_k += vp;
    out.local_signs[p] = (vp % 2 == 0) ? +1 : -1;
  }
  out.sign = (out.t_k % 2 == 0) ? +1 : -1;
  return out;
}

CheckReport det_frobenius_check(int k, std::uint64_t p, const IntPolynomial& M) {
  check(k >= 1 && k % 2 == 1, errc::precondition, "odd k required");
  check(p > static_cast<std::uint64_t>(k) && is_prime(p), errc::precondition,
        "p > k required");
  int d = M.degree();
  mpz_class lhs = (d % 2 == 0) ? mpz_class(M[d]) : mpz_class(-M[d]);

  mpz_class double_factorial = 1;
  for (long j = 3; j <= k; j += 2) double_factorial *= j;
  mpz_class rhs = jacobi(mpz_class(p), double_factorial) *
                  pow_mpz(mpz_class(p), static_cast<unsigned>((k * k - 1) / 4));
  if (lhs != rhs) {
    std::ostringstream os;
    os << "(-1)^d a_d = " << lhs << " but the determinant formula gives " << rhs;
    return {false, os.str()};
  }
  return {true, ""};
}

}  // namespace klsym
