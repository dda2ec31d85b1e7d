#include "klsym/arith/cyclotomic.hpp"

#include <sstream>

#include "klsym/arith/numtheory.hpp"
#include "klsym/error.hpp"

namespace klsym {

CyclotomicInt::CyclotomicInt(std::uint32_t p) : p_(p), c_(p - 1, 0) {
  check(is_prime(p), errc::not_prime, "cyclotomic order must be prime");
}

CyclotomicInt::CyclotomicInt(std::uint32_t p, std::vector<mpz_class> coords)
    : p_(p), c_(std::move(coords)) {
  check(is_prime(p), errc::not_prime, "cyclotomic order must be prime");
  check(c_.size() == p - 1, errc::precondition, "coordinate vector must have length p-1");
}

CyclotomicInt CyclotomicInt::root_power(std::uint32_t p, std::uint64_t e) {
  CyclotomicInt z(p);
  e %= p;
  if (e == p - 1u) {
    for (auto& v : z.c_) v = -1;
  } else {
    z.c_[e] = 1;
  }
  return z;
}

CyclotomicInt CyclotomicInt::integer(std::uint32_t p, const mpz_class& n) {
  CyclotomicInt z(p);
  z.c_[0] = n;
  return z;
}

CyclotomicInt CyclotomicInt::from_tally(std::uint32_t p, const std::vector<mpz_class>& tally) {
  check(tally.size() == p, errc::precondition, "tally must have length p");
  CyclotomicInt z(p);
  for (std::uint32_t c = 0; c + 1 < p; ++c) z.c_[c] = tally[c] - tally[p - 1];
  return z;
}

bool CyclotomicInt::operator==(const CyclotomicInt& o) const {
  return p_ == o.p_ && c_ == o.c_;
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
  check(p_ == o.p_, errc::precondition, "mixed cyclotomic orders");
  CyclotomicInt r(p_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
  check(p_ == o.p_, errc::precondition, "mixed cyclotomic orders");
  CyclotomicInt r(p_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt r(p_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
  return r;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
  check(p_ == o.p_, errc::precondition, "mixed cyclotomic orders");
  // Convolve in Z[x]/(x^p - 1), then reduce the zeta^{p-1} slot.
  std::vector<mpz_class> t(p_, 0);
  for (std::uint32_t i = 0; i + 1 < p_; ++i) {
    if (c_[i] == 0) continue;
    for (std::uint32_t j = 0; j + 1 < p_; ++j) {
      if (o.c_[j] == 0) continue;
      std::uint32_t k = i + j;
      if (k >= p_) k -= p_;
      t[k] += c_[i] * o.c_[j];
    }
  }
  return from_tally(p_, t);
}

CyclotomicInt CyclotomicInt::operator*(const mpz_class& n) const {
  CyclotomicInt r(p_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * n;
  return r;
}

CyclotomicInt CyclotomicInt::galois(std::uint64_t c) const {
  check(c % p_ != 0, errc::precondition, "galois exponent divisible by p");
  std::vector<mpz_class> t(p_, 0);
  for (std::uint32_t i = 0; i + 1 < p_; ++i)
    t[(i * (c % p_)) % p_] += c_[i];
  return from_tally(p_, t);
}

bool CyclotomicInt::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpz_class CyclotomicInt::to_integer() const {
  if (!is_rational()) fail(errc::not_rational, str());
  return c_[0];
}

std::string CyclotomicInt::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << c_[i].get_str();
  }
  os << ") in Z[zeta_" << p_ << "]";
  return os.str();
}

}  // namespace klsym
