#include "klsym/invariants/local_l.hpp"

#include <sstream>

#include "klsym/arith/numtheory.hpp"
#include "klsym/error.hpp"
#include "klsym/local/euler.hpp"

namespace klsym {

LocalFactorData bad_local_factor_odd_k(int k, std::uint64_t p, const IntPolynomial& M) {
  check(k >= 1 && k % 2 == 1, errc::precondition, "odd k required");
  LocalFactorData out;
  out.k = k;
  out.p = p;
  out.inverse_factor = M;
  if (p == 2 || p > static_cast<std::uint64_t>(k)) return out;

  ThetaSets theta = theta_sets(k, p);
  unsigned m = static_cast<unsigned>((k - 1) / 2);
  mpz_class pm1 = pow_mpz(mpz_class(p), m + 1);
  for (long a : theta.plus) {
    long aprime = a;
    while (aprime % static_cast<long>(p) == 0) aprime /= static_cast<long>(p);
    std::int64_t u = 2 * aprime;
    if ((1 + a * static_cast<long>(p)) / 2 % 2 == 1) u = -u;
    int sym = legendre(u, p);
    check(sym != 0, errc::precondition, "vanishing-cycle character is trivial");
    IntPolynomial lin(std::vector<mpz_class>{1, -(sym * pm1)});
    out.inverse_factor = out.inverse_factor * lin;
  }
  out.conductor_exponent = static_cast<int>(theta.minus.size());
  return out;
}

LocalFactorData local_factor_even_k(int k, std::uint64_t p, const IntPolynomial& M) {
  check(k >= 1 && k % 2 == 0, errc::precondition, "even k required");
  check(p >= 3 && is_prime(p), errc::not_prime, "odd prime required");
  unsigned total = static_cast<unsigned>(k / (2 * p));
  unsigned minus = 0;
  if (p % 4 == 3) minus = static_cast<unsigned>((k + 2 * p) / (4 * p));
  check(minus <= total, errc::precondition, "local factor multiplicities");

  mpz_class ph = pow_mpz(mpz_class(p), static_cast<unsigned>(k / 2));
  IntPolynomial plus_root(std::vector<mpz_class>{1, -ph});
  IntPolynomial minus_root(std::vector<mpz_class>{1, ph});

  LocalFactorData out;
  out.k = k;
  out.p = p;
  out.inverse_factor = minus_root.pow(minus) * plus_root.pow(total - minus) * M;
  out.conductor_exponent = static_cast<int>(total);
  return out;
}

LocalFactorData conjectural_2_factor_even(int k, const IntPolynomial& M2) {
  check(k >= 2 && k % 2 == 0, errc::precondition, "even k required");
  mpz_class ph = pow_mpz(mpz_class(2), static_cast<unsigned>(k / 2));
  unsigned bk = two_adic_trivial_multiplicities(k).second;
  IntPolynomial plus_root(std::vector<mpz_class>{1, -ph});
  IntPolynomial minus_root(std::vector<mpz_class>{1, ph});

  LocalFactorData out;
  out.k = k;
  out.p = 2;
  out.conjectural = true;
  out.inverse_factor = plus_root.pow(static_cast<unsigned>(k / 8)) * minus_root.pow(bk) * M2;
  out.conductor_exponent = k / 6;

  int expected = (k - 2) / 2 - (k % 4 == 0 ? 1 : 0) - k / 6;
  if (out.inverse_factor.degree() != expected) {
    std::ostringstream os;
    os << "conjectural 2-adic factor has degree " << out.inverse_factor.degree()
       << ", expected " << expected;
    fail(errc::degree_mismatch, os.str());
  }
  return out;
}

}  // namespace klsym
