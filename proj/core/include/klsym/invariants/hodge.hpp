#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "klsym/arith/intpoly.hpp"
#include "klsym/invariants/newton_polygon.hpp"
#include "klsym/local/euler.hpp"

namespace klsym {

// H1 / H1_mid describe the cohomology of the k-th symmetric power itself,
// the tilde variants the pullback to the double cover; _mid is the pure
// weight-(k+1) part of the corresponding H1.
enum class HodgeVariant { H1, H1_mid, H1_tilde, H1_mid_tilde };

struct HodgeData {
  int k = 0;
  HodgeVariant variant = HodgeVariant::H1;
  // (p, q, weight) -> multiplicity; all multiplicities here are 1.
  std::map<std::tuple<int, int, long>, int> entries;

  long dimension() const;
  // Sorted first coordinates, with multiplicity.
  std::vector<int> p_coordinates() const;
};

HodgeData hodge_numbers(int k, HodgeVariant variant);

struct HodgeDims {
  long h1 = 0;        // floor((k+1)/2)
  long h1_mid = 0;    // floor((k-1)/2) - [4|k]
  long h1_tilde = 0;  // k+1 odd k, k even k
  long h1_mid_tilde = 0;  // k odd k, k-2 even k
};

HodgeDims dims(int k);

// Hodge polygon of compactly supported cohomology: slopes are the duals
// k+1-p of the H1 entries, in increasing order.
Polygon hodge_polygon_compact(int k);

// Newton(Z, p) >= Hodge pointwise; endpoints coincide exactly when the
// prime is unramified (p > k or p = 2 for odd k, 2p > k for even k); and
// every coefficient satisfies ord_p(c_n) >= n(n-1).
CheckReport newton_vs_hodge(int k, std::uint64_t p, const IntPolynomial& Z);

struct IrregularityData {
  long irr = 0;        // irregularity at infinity, floor((k+1)/2)
  long irr_tilde = 0;  // k+1 odd k, k even k
  long swan_at_2 = 0;  // Swan conductor in characteristic 2
  long rigidity = 0;        // 2(1-m^2) for k=2m+1, -2(m^2-m-1) for k=2m
  long rigidity_tilde = 0;  // (k+1)(2-k)
};

IrregularityData irregularity_and_rigidity(int k);

}  // namespace klsym
