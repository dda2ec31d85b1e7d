#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace klsym {

bool is_prime(std::uint64_t n);

// Primes in [2, n], increasing.
std::vector<std::uint64_t> primes_upto(std::uint64_t n);

// Largest e with p^e | n; ord(0) is undefined and asserts.
int ord_p(std::uint64_t n, std::uint64_t p);
int ord_p(const mpz_class& n, std::uint64_t p);

// Squarefree part of n: the product of primes dividing n to an odd power.
std::uint64_t squarefree_part(std::uint64_t n);

// Legendre symbol (a/p) for odd prime p; 0 when p | a.
int legendre(std::int64_t a, std::uint64_t p);

// Jacobi symbol (a/n) for odd positive n.
int jacobi(const mpz_class& a, const mpz_class& n);

// Quadratic character mod 3 extended by 0 at multiples of 3;
// equals the Kronecker symbol (-3/n) on positive integers.
int chi3(std::uint64_t n);

std::uint64_t pow_u64(std::uint64_t base, unsigned exp);

mpz_class binomial(unsigned n, unsigned k);
mpz_class pow_mpz(const mpz_class& base, unsigned exp);

}  // namespace klsym
