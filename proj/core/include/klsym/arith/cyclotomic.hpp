#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace klsym {

// Element of Z[zeta_p], p prime, written on the basis 1, zeta, ..., zeta^{p-2}
// with zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).  coords() has length p-1.
class CyclotomicInt {
public:
  explicit CyclotomicInt(std::uint32_t p);
  CyclotomicInt(std::uint32_t p, std::vector<mpz_class> coords);

  // zeta^e, e arbitrary.
  static CyclotomicInt root_power(std::uint32_t p, std::uint64_t e);
  static CyclotomicInt integer(std::uint32_t p, const mpz_class& n);

  // Reduction of sum_{c=0}^{p-1} tally[c] * zeta^c.
  static CyclotomicInt from_tally(std::uint32_t p, const std::vector<mpz_class>& tally);

  std::uint32_t p() const { return p_; }
  const std::vector<mpz_class>& coords() const { return c_; }

  bool operator==(const CyclotomicInt& o) const;
  bool operator!=(const CyclotomicInt& o) const { return !(*this == o); }

  CyclotomicInt operator+(const CyclotomicInt& o) const;
  CyclotomicInt operator-(const CyclotomicInt& o) const;
  CyclotomicInt operator-() const;
  CyclotomicInt operator*(const CyclotomicInt& o) const;
  CyclotomicInt operator*(const mpz_class& n) const;

  // Galois twist zeta -> zeta^c, c not divisible by p.
  CyclotomicInt galois(std::uint64_t c) const;

  bool is_rational() const;

  // The value as a rational integer; throws NotRational if coords beyond the
  // constant one are nonzero.
  mpz_class to_integer() const;

  std::string str() const;

private:
  std::uint32_t p_;
  std::vector<mpz_class> c_;
};

}  // namespace klsym
