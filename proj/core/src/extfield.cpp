#include "klsym/arith/extfield.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "klsym/arith/numtheory.hpp"
#include "klsym/error.hpp"

namespace klsym {

namespace {

// Dense polynomials over F_p, constant term first, used only at construction.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  // f is monic of degree n given by its full coefficient vector.
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> t(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      t[i + j] = (t[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
  }
  std::size_t n = f.size() - 1;
  for (std::size_t i = t.size(); i-- > n;) {
    std::uint64_t c = t[i] % p;
    if (!c) continue;
    t[i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      t[i - n + j] = (t[i - n + j] + (p - f[j] % p) * c) % p;
  }
  Poly r(n);
  for (std::size_t i = 0; i < n && i < t.size(); ++i) r[i] = static_cast<std::uint32_t>(t[i]);
  trim(r);
  return r;
}

Poly powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly r = {1};
  while (e) {
    if (e & 1) r = mulmod(r, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  auto inv_mod_p = [p](std::uint32_t v) {
    std::uint64_t r = 1, x = v, e = p - 2;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  };
  while (!b.empty()) {
    // a mod b
    std::uint32_t lead_inv = inv_mod_p(b.back());
    while (a.size() >= b.size()) {
      std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
      if (c) {
        std::size_t off = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
          a[off + j] = static_cast<std::uint32_t>((a[off + j] + (p - static_cast<std::uint32_t>(c * b[j] % p))) % p);
      }
      a.pop_back();
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p, std::uint32_t n) {
  if (n == 1) return true;
  // x^{p^k} mod f chain; f irreducible iff x^{p^n} = x and
  // gcd(x^{p^{n/l}} - x, f) = 1 for every prime l | n.
  std::vector<std::uint32_t> prime_divs;
  std::uint32_t m = n;
  for (std::uint32_t d = 2; d * d <= m; ++d)
    while (m % d == 0) {
      if (prime_divs.empty() || prime_divs.back() != d) prime_divs.push_back(d);
      m /= d;
    }
  if (m > 1) prime_divs.push_back(m);

  Poly x = {0, 1};
  Poly frob = x;  // x^{p^k} for k = 0
  std::vector<Poly> frob_at(n + 1);
  frob_at[0] = x;
  for (std::uint32_t k = 1; k <= n; ++k) {
    frob = powmod(frob, p, f, p);
    frob_at[k] = frob;
  }
  if (frob_at[n] != x) return false;
  for (std::uint32_t l : prime_divs) {
    Poly d = frob_at[n / l];
    // d - x
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] + p - 1) % p;
    trim(d);
    Poly g = poly_gcd(f, d, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::uint64_t encode(const Poly& a, std::uint32_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

Poly decode(std::uint64_t v, std::uint32_t p, std::uint32_t n) {
  Poly a(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    a[i] = static_cast<std::uint32_t>(v % p);
    v /= p;
  }
  trim(a);
  return a;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    while (m % d == 0) {
      if (out.empty() || out.back() != d) out.push_back(d);
      m /= d;
    }
  if (m > 1) out.push_back(m);
  return out;
}

}  // namespace

ExtField ExtField::build(std::uint32_t p, std::uint32_t n, std::uint64_t q_budget) {
  return build_with(p, n, std::nullopt, std::nullopt, q_budget);
}

ExtField ExtField::build_with(std::uint32_t p, std::uint32_t n,
                              std::optional<std::vector<std::uint32_t>> modulus,
                              std::optional<std::uint64_t> generator,
                              std::uint64_t q_budget) {
  check(is_prime(p), errc::not_prime, "field characteristic " + std::to_string(p));
  check(n >= 1, errc::precondition, "extension degree must be positive");

  // q = p^n within budget, with overflow care. Index arithmetic in the
  // tables assumes q fits in 31 bits regardless of the caller's budget.
  std::uint64_t effective_budget = std::min<std::uint64_t>(q_budget, 1u << 31);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (q > effective_budget / p)
      fail(errc::budget_exceeded, "field size " + std::to_string(p) + "^" + std::to_string(n) +
                                      " exceeds budget " + std::to_string(q_budget));
    q *= p;
  }

  ExtField F;
  F.p_ = p;
  F.n_ = n;
  F.q_ = q;

  // Modulus: first irreducible tuple in index order, or the supplied one.
  Poly f;
  if (modulus) {
    check(modulus->size() == n, errc::precondition, "modulus needs n low coefficients");
    f = *modulus;
    for (auto& c : f) check(c < p, errc::precondition, "modulus coefficient out of range");
    f.push_back(1);
    check(is_irreducible(f, p, n), errc::precondition, "supplied modulus is reducible");
  } else {
    for (std::uint64_t v = 0;; ++v) {
      check(v < q, errc::check_failed, "no irreducible polynomial found");
      Poly cand = decode(v, p, n);
      cand.resize(n, 0);
      cand.push_back(1);
      if (is_irreducible(cand, p, n)) { f = cand; break; }
    }
  }
  F.modulus_.assign(f.begin(), f.end() - 1);
  F.modulus_.resize(n, 0);

  // tr(x^i) by Newton's identities: the roots of f are the conjugates of x.
  F.trace_basis_.assign(n, 0);
  F.trace_basis_[0] = n % p;
  {
    // s_i + a_{n-1} s_{i-1} + ... + a_{n-i+1} s_1 + i a_{n-i} = 0
    std::vector<std::uint64_t> s(n, 0);
    s[0] = n % p;
    for (std::uint32_t i = 1; i < n; ++i) {
      std::uint64_t acc = static_cast<std::uint64_t>(i % p) * F.modulus_[n - i] % p;
      for (std::uint32_t j = 1; j < i; ++j)
        acc = (acc + s[j] * F.modulus_[n - i + j]) % p;
      s[i] = (p - acc % p) % p;
      F.trace_basis_[i] = static_cast<std::uint32_t>(s[i]);
    }
  }

  // Generator: least unit index of order q-1, or the supplied one.
  auto order_ok = [&](std::uint64_t e) {
    Poly g = decode(e, p, n);
    if (g.empty()) return false;
    if (powmod(g, q - 1, f, p) != Poly{1}) return false;  // guards non-units never arise
    for (std::uint64_t l : prime_divisors(q - 1))
      if (powmod(g, (q - 1) / l, f, p) == Poly{1}) return false;
    return true;
  };
  if (generator) {
    check(*generator > 0 && *generator < q && order_ok(*generator), errc::precondition,
          "supplied generator does not have order q-1");
    F.gen_ = *generator;
  } else {
    std::uint64_t g = 1;
    while (g < q && !order_ok(g)) ++g;
    check(g < q, errc::check_failed, "no generator found");
    F.gen_ = g;
  }

  // Discrete log tables by repeated multiplication.
  F.exp_.assign(q - 1, 0);
  F.dlog_.assign(q, 0);
  Poly gp = decode(F.gen_, p, n);
  Poly cur = {1};
  for (std::uint64_t i = 0; i < q - 1; ++i) {
    std::uint64_t e = encode(cur, p);
    F.exp_[i] = static_cast<std::uint32_t>(e);
    F.dlog_[e] = static_cast<std::uint32_t>(i);
    cur = mulmod(cur, gp, f, p);
  }
  check(cur == Poly{1}, errc::check_failed, "generator order is not q-1");

  // Traces of powers of the generator.
  F.trace_pow_.assign(q - 1, 0);
  for (std::uint64_t i = 0; i < q - 1; ++i)
    F.trace_pow_[i] = static_cast<std::uint8_t>(F.trace(F.exp_[i]));

  return F;
}

std::uint32_t ExtField::trace(std::uint64_t a) const {
  std::uint64_t t = 0, v = a;
  for (std::uint32_t i = 0; i < n_; ++i) {
    t += (v % p_) * trace_basis_[i];
    v /= p_;
  }
  return static_cast<std::uint32_t>(t % p_);
}

std::uint64_t ExtField::dlog(std::uint64_t a) const {
  check(a != 0 && a < q_, errc::precondition, "dlog of zero");
  return dlog_[a];
}

std::uint64_t ExtField::add(std::uint64_t a, std::uint64_t b) const {
  // Digitwise base-p addition.
  if (p_ == 2) return a ^ b;
  std::uint64_t r = 0, mult = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    r += mult * ((a % p_ + b % p_) % p_);
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

std::uint64_t ExtField::mul(std::uint64_t a, std::uint64_t b) const {
  if (a == 0 || b == 0) return 0;
  std::uint64_t e = dlog_[a] + dlog_[b];
  if (e >= q_ - 1) e -= q_ - 1;
  return exp_[e];
}

std::uint64_t ExtField::inverse(std::uint64_t a) const {
  check(a != 0, errc::precondition, "inverse of zero");
  std::uint64_t e = dlog_[a];
  return exp_[e == 0 ? 0 : q_ - 1 - e];
}

std::uint64_t ExtField::pow(std::uint64_t a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  return exp_[static_cast<std::uint64_t>((static_cast<__uint128_t>(dlog_[a]) * e) % (q_ - 1))];
}

}  // namespace klsym
