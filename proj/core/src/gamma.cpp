#include "klsym/invariants/gamma.hpp"

#include <algorithm>
#include <sstream>

#include "klsym/error.hpp"
#include "klsym/invariants/hodge.hpp"

namespace klsym {

GammaFactor gamma_factor(int k) {
  check(k >= 1, errc::precondition, "gamma_factor needs k >= 1");
  GammaFactor g;
  g.m = (k - 1) / 2 - (k % 4 == 0 ? 1 : 0);
  for (int j = 1; j <= g.m; ++j) g.shifts.push_back(j);

  std::vector<int> recipe;
  for (const auto& [key, mult] : hodge_numbers(k, HodgeVariant::H1_mid).entries) {
    auto [p, q, w] = key;
    for (int i = 0; i < mult; ++i) {
      if (p < q) {
        recipe.push_back(p - 1);
        recipe.push_back(p);
      } else if (p == q) {
        check(2 * p == w && k % 4 == 3, errc::precondition,
              "middle Hodge class outside the k = 3 mod 4 case");
        recipe.push_back(p - 1);
      }
    }
  }
  std::sort(recipe.begin(), recipe.end());
  if (recipe != g.shifts) {
    std::ostringstream os;
    os << "recipe shifts for k = " << k << " differ from 1..m";
    fail(errc::recipe_mismatch, os.str());
  }
  return g;
}

}  // namespace klsym
