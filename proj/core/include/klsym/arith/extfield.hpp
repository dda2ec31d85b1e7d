#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace klsym {

inline constexpr std::uint64_t kDefaultFieldBudget = 1ull << 21;

// F_{p^n} presented as F_p[x]/(f) with discrete log tables.
//
// Elements are indices in [0, q): the base-p digits of an index are the
// coefficients of the residue polynomial, constant term in the lowest digit.
// The construction is deterministic: f is the first monic irreducible in the
// enumeration of constant-first coefficient tuples by that same integer
// encoding, and the generator is the unit of smallest index with full order.
class ExtField {
public:
  static ExtField build(std::uint32_t p, std::uint32_t n,
                        std::uint64_t q_budget = kDefaultFieldBudget);

  // Same field law with an explicit modulus (low n coefficients of a monic
  // degree-n polynomial) and/or generator; both are validated.  Exists so
  // tests can confirm results do not depend on the canonical choices.
  static ExtField build_with(std::uint32_t p, std::uint32_t n,
                             std::optional<std::vector<std::uint32_t>> modulus,
                             std::optional<std::uint64_t> generator,
                             std::uint64_t q_budget = kDefaultFieldBudget);

  std::uint32_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  std::uint64_t q() const { return q_; }

  // Low n coefficients of the monic modulus.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::uint64_t generator() const { return gen_; }

  // tr(g^i) for 0 <= i < q-1, values in [0, p).
  const std::vector<std::uint8_t>& trace_of_power() const { return trace_pow_; }

  std::uint32_t trace(std::uint64_t a) const;
  std::uint64_t dlog(std::uint64_t a) const;     // a != 0
  std::uint64_t element(std::uint64_t k) const { return exp_[k]; }  // g^k

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inverse(std::uint64_t a) const;  // a != 0
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

private:
  ExtField() = default;

  std::uint32_t p_ = 0;
  std::uint32_t n_ = 0;
  std::uint64_t q_ = 0;
  std::uint64_t gen_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> trace_basis_;  // tr(x^i), i < n
  std::vector<std::uint32_t> exp_;          // g^i as element index, length q-1
  std::vector<std::uint32_t> dlog_;         // inverse of exp_, dlog_[0] unused
  std::vector<std::uint8_t> trace_pow_;
};

}  // namespace klsym
