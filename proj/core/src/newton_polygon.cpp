#include "klsym/invariants/newton_polygon.hpp"

#include <algorithm>

#include "klsym/arith/numtheory.hpp"
#include "klsym/error.hpp"

namespace klsym {

mpq_class Polygon::value_at(long x) const {
  check(!vertices.empty() && x >= 0 && x <= width(), errc::precondition,
        "polygon evaluation out of range");
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (x > vertices[i].first) continue;
    auto [x0, y0] = vertices[i - 1];
    auto [x1, y1] = vertices[i];
    mpq_class v(y0);
    v += mpq_class(mpz_class(y1 - y0) * (x - x0), mpz_class(x1 - x0));
    v.canonicalize();
    return v;
  }
  return mpq_class(vertices.back().second);
}

std::vector<mpq_class> Polygon::unit_slopes() const {
  std::vector<mpq_class> out;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    auto [x0, y0] = vertices[i - 1];
    auto [x1, y1] = vertices[i];
    mpq_class s(mpz_class(y1 - y0), mpz_class(x1 - x0));
    s.canonicalize();
    out.insert(out.end(), static_cast<std::size_t>(x1 - x0), s);
  }
  return out;
}

Polygon lower_hull(std::vector<std::pair<long, long>> points) {
  check(!points.empty(), errc::precondition, "hull of no points");
  std::sort(points.begin(), points.end());
  // Monotone chain, lower side; cross <= 0 also drops collinear points.
  std::vector<std::pair<long, long>> hull;
  for (const auto& q : points) {
    while (hull.size() >= 2) {
      auto [ax, ay] = hull[hull.size() - 2];
      auto [bx, by] = hull[hull.size() - 1];
      mpz_class cross = mpz_class(bx - ax) * mpz_class(q.second - ay) -
                        mpz_class(by - ay) * mpz_class(q.first - ax);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(q);
  }
  return Polygon{std::move(hull)};
}

Polygon polygon_from_slopes(const std::vector<long>& slopes) {
  check(std::is_sorted(slopes.begin(), slopes.end()), errc::precondition,
        "slopes must be sorted");
  std::vector<std::pair<long, long>> pts{{0, 0}};
  long y = 0;
  for (std::size_t j = 0; j < slopes.size(); ++j) {
    y += slopes[j];
    pts.emplace_back(static_cast<long>(j + 1), y);
  }
  return lower_hull(std::move(pts));
}

Polygon newton_polygon(const IntPolynomial& P, std::uint64_t p) {
  check(P[0] == 1, errc::precondition, "newton_polygon wants constant term 1");
  std::vector<std::pair<long, long>> pts;
  for (int n = 0; n <= P.degree(); ++n) {
    if (P[n] == 0) continue;
    pts.emplace_back(n, ord_p(P[n], p));
  }
  return lower_hull(std::move(pts));
}

}  // namespace klsym
