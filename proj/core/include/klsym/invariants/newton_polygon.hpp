#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "klsym/arith/intpoly.hpp"

namespace klsym {

// Convex lattice path starting at (0,0), corner vertices only,
// slopes strictly increasing left to right.
struct Polygon {
  std::vector<std::pair<long, long>> vertices;

  long width() const { return vertices.back().first; }
  long height() const { return vertices.back().second; }

  // Value of the piecewise-linear function at integer 0 <= x <= width().
  mpq_class value_at(long x) const;

  // One slope per unit x-step, repeated along each edge.
  std::vector<mpq_class> unit_slopes() const;
};

// Builds the polygon through the given points after sorting by x;
// collinear interior points are merged. Points must have distinct x.
Polygon lower_hull(std::vector<std::pair<long, long>> points);

// Polygon whose slope at step j is slopes[j-1]; slopes must be sorted.
Polygon polygon_from_slopes(const std::vector<long>& slopes);

// Lower convex hull of {(n, ord_p(c_n))} over the nonzero coefficients.
// Requires constant term 1, so the polygon starts at (0,0).
Polygon newton_polygon(const IntPolynomial& P, std::uint64_t p);

}  // namespace klsym
