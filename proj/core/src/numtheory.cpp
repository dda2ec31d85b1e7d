#include "klsym/arith/numtheory.hpp"

#include <cassert>

#include "klsym/error.hpp"

namespace klsym {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) -> std::uint64_t {
    return static_cast<std::uint64_t>((__uint128_t)a * b % m);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_upto(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> sieve(n + 1, true);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) sieve[j] = false;
  }
  return out;
}

int ord_p(std::uint64_t n, std::uint64_t p) {
  assert(n != 0 && p >= 2);
  int e = 0;
  while (n % p == 0) { n /= p; ++e; }
  return e;
}

int ord_p(const mpz_class& n, std::uint64_t p) {
  assert(n != 0 && p >= 2);
  mpz_class q = abs(n);
  int e = 0;
  while (mpz_divisible_ui_p(q.get_mpz_t(), p)) {
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), p);
    ++e;
  }
  return e;
}

std::uint64_t squarefree_part(std::uint64_t n) {
  assert(n != 0);
  std::uint64_t out = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    if (e & 1) out *= p;
  }
  return out * n;  // leftover n is prime or 1
}

int legendre(std::int64_t a, std::uint64_t p) {
  assert(p > 2 && is_prime(p));
  std::int64_t r = a % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  mpz_class am(static_cast<unsigned long>(r)), pm(static_cast<unsigned long>(p));
  return mpz_legendre(am.get_mpz_t(), pm.get_mpz_t());
}

int jacobi(const mpz_class& a, const mpz_class& n) {
  return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

int chi3(std::uint64_t n) {
  switch (n % 3) {
    case 0: return 0;
    case 1: return 1;
    default: return -1;
  }
}

std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) {
    check(base == 0 || r <= UINT64_MAX / (base ? base : 1), errc::budget_exceeded,
          "pow_u64 overflow");
    r *= base;
  }
  return r;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class pow_mpz(const mpz_class& base, unsigned exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

}  // namespace klsym
