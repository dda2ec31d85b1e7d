#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace klsym {

// Polynomial over Z, coefficients constant term first.
// Invariant: the leading coefficient is nonzero unless the polynomial is 0,
// in which case coeffs() == {0} and degree() == 0.
class IntPolynomial {
public:
  IntPolynomial() : c_{0} {}
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial one() { return IntPolynomial({1}); }

  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& operator[](std::size_t i) const;  // 0 beyond the degree
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }

  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial pow(unsigned e) const;

  // Quotient of an exact division; throws InexactDivision otherwise.
  IntPolynomial exact_div(const IntPolynomial& divisor) const;
  bool divisible_by(const IntPolynomial& divisor) const;

  mpz_class eval(const mpz_class& x) const;

  // Formats as e.g. "1 + 24*T - 25*T^2".
  std::string str(const std::string& var = "T") const;

private:
  void trim();
  std::vector<mpz_class> c_;
};

// Coefficients c_0..c_d of exp(sum_{n>=1} m_n T^n / n) truncated at degree d.
// Every c_j must come out integral (the recursion j*c_j = sum m_i c_{j-i}
// must divide exactly); throws NonIntegralCoefficient otherwise.
IntPolynomial series_exp_from_power_sums(const std::vector<mpz_class>& m, int d);

// Inverse direction: m_1..m_n with P = exp(sum m_n T^n / n), i.e.
// m_n = -(sum of n-th powers of the reciprocal roots of P).
std::vector<mpz_class> power_sums_from_polynomial(const IntPolynomial& P, int n);

// Power series inverse 1/P mod T^{n+1}; requires constant term 1.
std::vector<mpz_class> series_inverse(const IntPolynomial& P, int n);

}  // namespace klsym
