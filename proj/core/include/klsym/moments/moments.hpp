#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include <gmpxx.h>

#include "klsym/arith/cyclotomic.hpp"
#include "klsym/arith/extfield.hpp"

namespace klsym {

// s_k with s_0 = 1, s_1 = t, s_j = t*s_{j-1} - q*s_{j-2}; equals
// sum_{i=0..k} alpha^i beta^{k-i} for alpha+beta = t, alpha*beta = q.
CyclotomicInt sym_power_trace(int k, const CyclotomicInt& t, const mpz_class& q);
mpz_class sym_power_trace(int k, const mpz_class& t, const mpz_class& q);

// P_r = sum over a in F_q^* of (-Kl(a;q))^r for r = 0..rmax, as rational
// integers. P_0 = q-1 and P_1 = -1 always.
std::vector<mpz_class> power_sum_family(const ExtField& F, int rmax, unsigned threads = 1);

// m_2^k(q) assembled from the power sums of t_a = -Kl(a;q) through the
// closed form of s_k.
mpz_class moment_from_power_sums(int k, const mpz_class& q,
                                 const std::vector<mpz_class>& P);

// m_2^k(q) = sum over a in F_q^* of s_k(-Kl(a;q), q).
mpz_class moment(int k, const ExtField& F, unsigned threads = 1);

// Same value, summing per-a symmetric power traces in Z[zeta_p]. Quadratic
// in q; kept as the independent reference for tests.
mpz_class moment_reference(int k, const ExtField& F);

// Memoizes fields and power-sum families per (p, n) so that every k <= kmax
// reuses one enumeration of F_{p^n}. Not safe for concurrent use; the
// parallelism lives inside the enumeration itself.
class MomentTable {
 public:
  explicit MomentTable(int kmax = 12, std::uint64_t budget = kDefaultFieldBudget,
                       unsigned threads = 1);

  const ExtField& field(std::uint64_t p, int n);
  mpz_class moment(int k, std::uint64_t p, int n);
  const std::vector<mpz_class>& power_sums(std::uint64_t p, int n);
  int kmax() const { return kmax_; }
  std::uint64_t budget() const { return budget_; }

 private:
  int kmax_;
  std::uint64_t budget_;
  unsigned threads_;
  std::map<std::pair<std::uint64_t, int>, std::unique_ptr<ExtField>> fields_;
  std::map<std::pair<std::uint64_t, int>, std::vector<mpz_class>> sums_;
};

}  // namespace klsym
