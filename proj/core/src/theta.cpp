#include "klsym/invariants/theta.hpp"

#include "klsym/arith/numtheory.hpp"
#include "klsym/error.hpp"

namespace klsym {

ThetaSets theta_sets(int k, std::uint64_t p) {
  check(k >= 1 && k % 2 == 1, errc::precondition, "theta_sets needs odd k");
  check(p >= 3 && is_prime(p), errc::not_prime, "theta_sets needs an odd prime");
  ThetaSets t;
  t.k = k;
  t.p = p;
  for (long a = 1; static_cast<std::uint64_t>(a) * p <= static_cast<std::uint64_t>(k); a += 2) {
    if (ord_p(static_cast<std::uint64_t>(a), p) % 2 == 1)
      t.plus.push_back(a);
    else
      t.minus.push_back(a);
  }
  std::uint64_t expected = (static_cast<std::uint64_t>(k) + p) / (2 * p);
  check(t.plus.size() + t.minus.size() == expected, errc::mismatch,
        "theta cardinality identity");
  return t;
}

}  // namespace klsym
