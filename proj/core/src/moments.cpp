#include "klsym/moments/moments.hpp"

#include <utility>

#include "klsym/arith/numtheory.hpp"
#include "klsym/error.hpp"
#include "klsym/moments/kloosterman.hpp"
#include "parallel.hpp"

namespace klsym {

CyclotomicInt sym_power_trace(int k, const CyclotomicInt& t, const mpz_class& q) {
  check(k >= 0, errc::precondition, "negative symmetric power");
  CyclotomicInt prev2 = CyclotomicInt::integer(t.p(), 1);
  if (k == 0) return prev2;
  CyclotomicInt prev1 = t;
  for (int j = 2; j <= k; ++j) {
    CyclotomicInt cur = t * prev1 - prev2 * q;
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

mpz_class sym_power_trace(int k, const mpz_class& t, const mpz_class& q) {
  check(k >= 0, errc::precondition, "negative symmetric power");
  mpz_class prev2 = 1;
  if (k == 0) return prev2;
  mpz_class prev1 = t;
  for (int j = 2; j <= k; ++j) {
    mpz_class cur = t * prev1 - q * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

std::vector<mpz_class> power_sum_family(const ExtField& F, int rmax, unsigned threads) {
  check(rmax >= 0, errc::precondition, "negative power-sum order");
  const std::uint32_t p = F.p();
  const std::uint64_t L = F.q() - 1;
  auto tallies = kloosterman_tallies(F, threads);

  // Group-ring accumulators: S[r] holds sum over a of Kl_a^r as a
  // nonnegative tally vector over Z/p before cyclotomic reduction.
  unsigned nthreads = detail::effective_threads(threads);
  std::vector<std::vector<std::vector<mpz_class>>> partial(
      nthreads, std::vector<std::vector<mpz_class>>(rmax + 1, std::vector<mpz_class>(p, 0)));

  detail::parallel_chunks(L, threads, [&](unsigned chunk, std::uint64_t b, std::uint64_t e) {
    auto& S = partial[chunk % nthreads];
    std::vector<mpz_class> w(p), tmp(p);
    std::vector<unsigned long> v(p);
    for (std::uint64_t j = b; j < e; ++j) {
      for (std::uint32_t c = 0; c < p; ++c) v[c] = tallies[c][j];
      for (std::uint32_t c = 0; c < p; ++c) w[c] = 0;
      w[0] = 1;
      for (int r = 1; r <= rmax; ++r) {
        for (std::uint32_t c = 0; c < p; ++c) tmp[c] = 0;
        for (std::uint32_t i = 0; i < p; ++i) {
          if (w[i] == 0) continue;
          for (std::uint32_t c = 0; c < p; ++c) {
            if (v[c] == 0) continue;
            std::uint32_t d = i + c >= p ? i + c - p : i + c;
            mpz_addmul_ui(tmp[d].get_mpz_t(), w[i].get_mpz_t(), v[c]);
          }
        }
        std::swap(w, tmp);
        auto& acc = S[r];
        for (std::uint32_t c = 0; c < p; ++c) acc[c] += w[c];
      }
    }
  });

  std::vector<mpz_class> P(rmax + 1);
  P[0] = mpz_class(F.q()) - 1;
  for (int r = 1; r <= rmax; ++r) {
    std::vector<mpz_class> total(p, 0);
    for (unsigned t = 0; t < nthreads; ++t)
      for (std::uint32_t c = 0; c < p; ++c) total[c] += partial[t][r][c];
    mpz_class s = CyclotomicInt::from_tally(p, total).to_integer();
    P[r] = (r % 2 == 0) ? s : -s;
  }
  return P;
}

mpz_class moment_from_power_sums(int k, const mpz_class& q,
                                 const std::vector<mpz_class>& P) {
  check(static_cast<int>(P.size()) > k, errc::precondition, "power-sum family too short");
  mpz_class m = 0;
  mpz_class qpow = 1;
  for (int j = 0; 2 * j <= k; ++j) {
    mpz_class term = binomial(k - j, j) * qpow * P[k - 2 * j];
    if (j % 2 == 0)
      m += term;
    else
      m -= term;
    qpow *= q;
  }
  return m;
}

mpz_class moment(int k, const ExtField& F, unsigned threads) {
  check(k >= 0, errc::precondition, "negative moment order");
  auto P = power_sum_family(F, k, threads);
  return moment_from_power_sums(k, mpz_class(F.q()), P);
}

mpz_class moment_reference(int k, const ExtField& F) {
  CyclotomicInt acc = CyclotomicInt::integer(F.p(), 0);
  mpz_class q(F.q());
  for (std::uint64_t a = 1; a < F.q(); ++a) {
    CyclotomicInt t = -kloosterman_exact(F, a);
    acc = acc + sym_power_trace(k, t, q);
  }
  return acc.to_integer();
}

MomentTable::MomentTable(int kmax, std::uint64_t budget, unsigned threads)
    : kmax_(kmax), budget_(budget), threads_(threads) {
  check(kmax >= 1, errc::precondition, "kmax must be positive");
}

const ExtField& MomentTable::field(std::uint64_t p, int n) {
  auto key = std::make_pair(p, n);
  auto it = fields_.find(key);
  if (it == fields_.end())
    it = fields_.emplace(key, std::make_unique<ExtField>(ExtField::build(p, n, budget_))).first;
  return *it->second;
}

const std::vector<mpz_class>& MomentTable::power_sums(std::uint64_t p, int n) {
  auto key = std::make_pair(p, n);
  auto it = sums_.find(key);
  if (it == sums_.end())
    it = sums_.emplace(key, power_sum_family(field(p, n), kmax_, threads_)).first;
  return it->second;
}

mpz_class MomentTable::moment(int k, std::uint64_t p, int n) {
  check(k <= kmax_, errc::precondition, "moment order beyond table kmax");
  mpz_class q = pow_mpz(mpz_class(p), n);
  return moment_from_power_sums(k, q, power_sums(p, n));
}

}  // namespace klsym
