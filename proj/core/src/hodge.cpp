#include "klsym/invariants/hodge.hpp"

#include <algorithm>
#include <sstream>

#include "klsym/arith/numtheory.hpp"
#include "klsym/error.hpp"

namespace klsym {

long HodgeData::dimension() const {
  long total = 0;
  for (const auto& [key, mult] : entries) total += mult;
  return total;
}

std::vector<int> HodgeData::p_coordinates() const {
  std::vector<int> out;
  for (const auto& [key, mult] : entries)
    out.insert(out.end(), mult, std::get<0>(key));
  std::sort(out.begin(), out.end());
  return out;
}

HodgeData hodge_numbers(int k, HodgeVariant variant) {
  check(k >= 1, errc::precondition, "hodge_numbers needs k >= 1");
  HodgeData h;
  h.k = k;
  h.variant = variant;
  bool tilde = (variant == HodgeVariant::H1_tilde || variant == HodgeVariant::H1_mid_tilde);
  bool mid = (variant == HodgeVariant::H1_mid || variant == HodgeVariant::H1_mid_tilde);
  long w = k + 1;

  auto add = [&](int p, int q, long weight) { h.entries[{p, q, weight}] += 1; };

  if (!tilde) {
    if (k % 2 == 1) {
      for (int p = 2; p <= k - 1; p += 2) add(p, k + 1 - p, w);
    } else {
      for (int m = 2; m <= 2 * ((k - 1) / 4); m += 2) {
        add(m, k + 1 - m, w);
        add(k + 1 - m, m, w);
      }
      if ((k / 2 + 1) % 2 == 1 && !mid) add(k / 2 + 1, k / 2 + 1, w + 1);
    }
  } else {
    if (k % 2 == 1) {
      for (int p = 1; p <= k; ++p) add(p, k + 1 - p, w);
    } else {
      for (int p = 1; p <= k; ++p)
        if (p != k / 2 && p != k / 2 + 1) add(p, k + 1 - p, w);
      if (!mid) add(k / 2 + 1, k / 2 + 1, w + 1);
    }
  }
  if (!mid) add(k + 1, k + 1, 2 * k + 2);
  return h;
}

HodgeDims dims(int k) {
  check(k >= 1, errc::precondition, "dims needs k >= 1");
  HodgeDims d;
  d.h1 = (k + 1) / 2;
  d.h1_mid = (k - 1) / 2 - (k % 4 == 0 ? 1 : 0);
  d.h1_tilde = (k % 2 == 1) ? k + 1 : k;
  d.h1_mid_tilde = (k % 2 == 1) ? k : k - 2;
  return d;
}

Polygon hodge_polygon_compact(int k) {
  std::vector<long> slopes;
  for (int p : hodge_numbers(k, HodgeVariant::H1).p_coordinates())
    slopes.push_back(k + 1 - p);
  std::sort(slopes.begin(), slopes.end());
  return polygon_from_slopes(slopes);
}

CheckReport newton_vs_hodge(int k, std::uint64_t p, const IntPolynomial& Z) {
  Polygon N = newton_polygon(Z, p);
  Polygon H = hodge_polygon_compact(k);
  if (N.width() > H.width()) return {false, "Newton polygon wider than Hodge polygon"};

  for (long x = 0; x <= N.width(); ++x) {
    if (N.value_at(x) < H.value_at(x)) {
      std::ostringstream os;
      os << "Newton dips below Hodge at x = " << x;
      return {false, os.str()};
    }
  }

  bool expect_equal = (k % 2 == 1)
                          ? (p > static_cast<std::uint64_t>(k) || p == 2)
                          : (2 * p > static_cast<std::uint64_t>(k));
  bool equal = (N.width() == H.width() && N.height() == H.height());
  if (equal != expect_equal) {
    std::ostringstream os;
    os << "endpoints " << (equal ? "coincide" : "differ") << " contrary to ramification at p = "
       << p;
    return {false, os.str()};
  }

  for (int n = 0; n <= Z.degree(); ++n) {
    if (Z[n] == 0) continue;
    if (ord_p(Z[n], p) < static_cast<long>(n) * (n - 1)) {
      std::ostringstream os;
      os << "ord_p(c_" << n << ") < n(n-1)";
      return {false, os.str()};
    }
  }
  return {true, ""};
}

IrregularityData irregularity_and_rigidity(int k) {
  check(k >= 1, errc::precondition, "k >= 1 required");
  IrregularityData out;
  out.irr = (k + 1) / 2;
  out.irr_tilde = (k % 2 == 1) ? k + 1 : k;
  out.swan_at_2 = (k % 2 == 1) ? (k + 1) / 2 : (k + 2) / 4;
  long m = k / 2;
  out.rigidity = (k % 2 == 1) ? 2 * (1 - m * m) : -2 * (m * m - m - 1);
  out.rigidity_tilde = static_cast<long>(k + 1) * (2 - k);
  return out;
}

}  // namespace klsym
