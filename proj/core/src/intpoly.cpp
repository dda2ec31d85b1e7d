#include "klsym/arith/intpoly.hpp"

#include <sstream>

#include "klsym/error.hpp"

namespace klsym {

namespace {
const mpz_class kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.push_back(0);
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  if (c_.empty()) c_.push_back(0);
  trim();
}

void IntPolynomial::trim() {
  while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPolynomial::operator[](std::size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i] + o[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i] - o[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial();
  std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] += c_[i] * o.c_[j];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial r = one();
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

IntPolynomial IntPolynomial::exact_div(const IntPolynomial& divisor) const {
  check(!divisor.is_zero(), errc::precondition, "division by zero polynomial");
  if (is_zero()) return IntPolynomial();
  if (degree() < divisor.degree())
    fail(errc::inexact_division, str() + " not divisible by " + divisor.str());
  std::vector<mpz_class> rem = c_;
  std::vector<mpz_class> quot(c_.size() - divisor.c_.size() + 1, 0);
  const mpz_class& lead = divisor.c_.back();
  for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(),
                rem[i + divisor.degree()].get_mpz_t(), lead.get_mpz_t());
    if (r != 0)
      fail(errc::inexact_division, str() + " not divisible by " + divisor.str());
    quot[i] = q;
    for (std::size_t j = 0; j < divisor.c_.size(); ++j)
      rem[i + j] -= q * divisor.c_[j];
  }
  for (const mpz_class& v : rem)
    if (v != 0)
      fail(errc::inexact_division, str() + " not divisible by " + divisor.str());
  return IntPolynomial(std::move(quot));
}

bool IntPolynomial::divisible_by(const IntPolynomial& divisor) const {
  try {
    exact_div(divisor);
    return true;
  } catch (const Error& e) {
    if (e.code() == errc::inexact_division) return false;
    throw;
  }
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
  mpz_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

std::string IntPolynomial::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0 && !(is_zero() && i == 0)) continue;
    mpz_class a = c_[i];
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

IntPolynomial series_exp_from_power_sums(const std::vector<mpz_class>& m, int d) {
  check(d >= 0, errc::precondition, "negative truncation degree");
  check(static_cast<int>(m.size()) >= d, errc::precondition,
        "need d power sums to build degree d");
  std::vector<mpz_class> c(static_cast<std::size_t>(d) + 1, 0);
  c[0] = 1;
  for (int j = 1; j <= d; ++j) {
    mpz_class s = 0;
    for (int i = 1; i <= j; ++i) s += m[i - 1] * c[j - i];
    mpz_class q, r;
    mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t(), j);
    if (r != 0)
      fail(errc::non_integral_coefficient,
           "coefficient " + std::to_string(j) + " of the exponential is " +
               s.get_str() + "/" + std::to_string(j));
    c[j] = q;
  }
  return IntPolynomial(std::move(c));
}

std::vector<mpz_class> power_sums_from_polynomial(const IntPolynomial& P, int n) {
  check(P[0] == 1, errc::precondition, "constant term must be 1");
  std::vector<mpz_class> m;
  m.reserve(n);
  for (int j = 1; j <= n; ++j) {
    mpz_class s = j * P[j];
    for (int i = 1; i < j; ++i) s -= m[i - 1] * P[j - i];
    m.push_back(s);
  }
  return m;
}

std::vector<mpz_class> series_inverse(const IntPolynomial& P, int n) {
  check(P[0] == 1, errc::precondition, "constant term must be 1");
  std::vector<mpz_class> b(static_cast<std::size_t>(n) + 1, 0);
  b[0] = 1;
  for (int j = 1; j <= n; ++j) {
    mpz_class s = 0;
    for (int i = 1; i <= j; ++i) s += P[i] * b[j - i];
    b[j] = -s;
  }
  return b;
}

}  // namespace klsym
