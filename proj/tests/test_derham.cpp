#include "doctest.h"

#include <vector>

#include "klsym/derham/derham.hpp"
#include "klsym/error.hpp"
#include "klsym/invariants/hodge.hpp"

using namespace klsym;

namespace {
GradedElement scaled(int r, int a, long c) {
  GradedElement x;
  x.add_term(r, a, c);
  return x;
}
}  // namespace

TEST_CASE("connection on basis monomials") {
  // eta_0 maps to k eta_1.
  CHECK(connection_apply(monomial(0, 0), 5) == scaled(0, 1, 5));
  // eta_k maps to k z eta_{k-1}.
  CHECK(connection_apply(monomial(0, 5), 5) == scaled(1, 4, 5));
  // z eta_0 keeps its Euler term r = 1 and raises to k z eta_1.
  GradedElement expect = scaled(1, 0, 1);
  expect.add_term(1, 1, 3);
  CHECK(connection_apply(monomial(1, 0), 3) == expect);

  GradedElement x = monomial(2, 1);
  GradedElement full = connection_apply(x, 4);
  GradedElement split = connection_euler_part(x);
  for (const auto& [key, c] : connection_raising_part(x, 4).terms)
    split.add_term(key.first, key.second, c);
  CHECK(full == split);

  CHECK(monomial(1, 2).top_degree() == 4);
  CHECK(GradedElement{}.is_zero());
  CHECK_THROWS_AS((void)connection_apply(monomial(0, 5), 4), Error);
}

TEST_CASE("cohomology of the connection") {
  CohomologyBases c3 = cohomology(3);
  CHECK(c3.h0.empty());
  REQUIRE(c3.h1.size() == 2);
  CHECK(c3.h1[0] == monomial(0, 0));
  CHECK(c3.h1[1] == monomial(1, 0));

  CHECK(cohomology(7).h1.size() == 4);

  CohomologyBases c2 = cohomology(2);
  CHECK(c2.h1.size() == 1);
  CHECK(c2.h1[0] == monomial(0, 0));

  for (int k = 1; k <= 12; ++k) {
    CohomologyBases c = cohomology(k);
    CHECK(c.h0.empty());
    CHECK(c.h1.size() == static_cast<std::size_t>((k + 1) / 2));
  }

  // The verdict does not depend on the truncation once past the margin.
  for (int k : {3, 6}) {
    CohomologyBases lo = cohomology(k, 2 * k + 4);
    CohomologyBases hi = cohomology(k, 2 * k + 10);
    CHECK(lo.h1.size() == hi.h1.size());
  }

  CHECK_THROWS_AS((void)cohomology(3, 9), Error);
}

TEST_CASE("kernel generator of the graded complex") {
  GradedElement s2 = graded_kernel_generator(2);
  GradedElement want2 = scaled(0, 2, 1);
  want2.add_term(1, 0, -1);
  CHECK(s2 == want2);

  GradedElement s4 = graded_kernel_generator(4);
  GradedElement want4 = scaled(0, 4, 1);
  want4.add_term(1, 2, -2);
  want4.add_term(2, 0, 1);
  CHECK(s4 == want4);

  GradedElement s6 = graded_kernel_generator(6);
  CHECK(s6.terms.at({0, 6}) == 1);
  CHECK(s6.terms.at({1, 4}) == -3);
  CHECK(s6.terms.at({2, 2}) == 3);
  CHECK(s6.terms.at({3, 0}) == -1);

  // sigma is killed by the raising part, so only the Euler part survives.
  for (int k : {2, 4, 6, 8}) {
    GradedElement s = graded_kernel_generator(k);
    CHECK(connection_apply(s, k) == connection_euler_part(s));
  }

  CHECK_THROWS_AS((void)graded_kernel_generator(3), Error);
}

TEST_CASE("euler images avoid the graded image") {
  for (int k : {2, 4, 6, 8, 10})
    for (int r = 0; r <= 5; ++r) CHECK(euler_image_nonzero_in_graded_cokernel(k, r));
}

TEST_CASE("filtration jumps") {
  FiltrationJumps f7 = filtration_jumps(7);
  CHECK(f7.computed == std::vector<int>{2, 4, 6, 8});
  CHECK(f7.full == f7.computed);
  CHECK_FALSE(f7.partial);

  CHECK(filtration_jumps(5).computed == std::vector<int>{2, 4, 6});
  CHECK(filtration_jumps(1).computed == std::vector<int>{2});

  FiltrationJumps f6 = filtration_jumps(6);
  CHECK(f6.computed == std::vector<int>{5, 7});
  CHECK(f6.full == std::vector<int>{2, 5, 7});
  CHECK(f6.partial);

  // Jumps always agree with the Hodge gradings on the validity range.
  for (int k = 1; k <= 40; ++k) {
    FiltrationJumps f = filtration_jumps(k);
    CHECK(f.full == hodge_numbers(k, HodgeVariant::H1).p_coordinates());
    if (k % 2 == 1) CHECK(f.computed == f.full);
  }
}
