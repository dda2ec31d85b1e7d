#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "klsym/arith/numtheory.hpp"
#include "klsym/error.hpp"
#include "klsym/local/euler.hpp"
#include "klsym/moments/moments.hpp"

using namespace klsym;

TEST_CASE("predicted degrees of the zeta polynomials") {
  CHECK(degree_Z(1, 2) == 1);
  CHECK(degree_Z(2, 7) == 1);
  CHECK(degree_Z(3, 3) == 1);
  CHECK(degree_Z(3, 5) == 2);
  CHECK(degree_Z(4, 3) == 2);
  CHECK(degree_Z(5, 3) == 2);
  CHECK(degree_Z(6, 3) == 2);
  CHECK(degree_Z(6, 2) == 2);
  CHECK(degree_Z(7, 2) == 4);
  CHECK(degree_Z(8, 2) == 2);
  CHECK(degree_Z(24, 2) == 6);
  CHECK(degree_Z(9, 11) == 5);
  CHECK(degree_Z(10, 11) == 5);
  CHECK(degree_Z(9, 13) == 5);
  CHECK(degree_Z(10, 13) == 5);

  // At p = 2 and even k the degree splits as 1 (the factor 1-T) plus the
  // two root multiplicities plus the middle part 2*floor((k+2)/12) - 2[12|k].
  for (int k = 2; k <= 40; k += 2) {
    auto [ak, bk] = two_adic_trivial_multiplicities(k);
    int mid = 2 * ((k + 2) / 12) - (k % 12 == 0 ? 2 : 0);
    CHECK(degree_Z(k, 2) == 1 + static_cast<int>(ak + bk) + mid);
  }
}

TEST_CASE("trivial factor multiplicities at p = 2") {
  using P = std::pair<unsigned, unsigned>;
  CHECK(two_adic_trivial_multiplicities(2) == P{0, 0});
  CHECK(two_adic_trivial_multiplicities(6) == P{0, 1});
  CHECK(two_adic_trivial_multiplicities(8) == P{1, 0});
  CHECK(two_adic_trivial_multiplicities(12) == P{1, 1});
  CHECK(two_adic_trivial_multiplicities(24) == P{2, 1});
  CHECK(two_adic_trivial_multiplicities(30) == P{1, 2});
  CHECK_THROWS_AS((void)two_adic_trivial_multiplicities(5), Error);
}

TEST_CASE("trivial factors") {
  CHECK(trivial_factor(3, 5) == IntPolynomial{1, -1});
  CHECK(trivial_factor(9, 3) == IntPolynomial{1, -1});
  CHECK(trivial_factor(6, 3) == IntPolynomial{1, 26, -27});    // (1-T)(1+27T)
  CHECK(trivial_factor(4, 5) == IntPolynomial{1, -26, 25});    // (1-T)(1-25T)
  CHECK(trivial_factor(6, 2) == IntPolynomial{1, 7, -8});      // (1-T)(1+8T)
  CHECK(trivial_factor(8, 2) == IntPolynomial{1, -17, 16});    // (1-T)(1-16T)
  CHECK(trivial_factor(8, 3) == IntPolynomial{1, -1} * IntPolynomial{1, 81} *
                                    IntPolynomial{1, -81});
}

TEST_CASE("closed forms of the first zeta polynomials") {
  MomentTable table(4);
  IntPolynomial one_minus_T{1, -1};
  for (std::uint64_t p : primes_upto(50)) {
    CHECK(zeta_poly(1, p, table) == one_minus_T);
    CHECK(zeta_poly(2, p, table) == one_minus_T);

    long chi = chi3(p);
    mpz_class p2 = mpz_class(p) * static_cast<long>(p);
    IntPolynomial z3 = one_minus_T * IntPolynomial(std::vector<mpz_class>{1, -chi * p2});
    CHECK(zeta_poly(3, p, table) == z3);

    if (p == 2) {
      CHECK(zeta_poly(4, p, table) == one_minus_T);
    } else {
      CHECK(zeta_poly(4, p, table) ==
            one_minus_T * IntPolynomial(std::vector<mpz_class>{1, -p2}));
    }
  }
}

TEST_CASE("frozen zeta polynomials") {
  MomentTable table(12);
  CHECK(zeta_poly(3, 5, table) == IntPolynomial{1, 24, -25});
  CHECK(zeta_poly(3, 7, table) == IntPolynomial{1, -50, 49});
  CHECK(zeta_poly(3, 2, table) == IntPolynomial{1, 3, -4});
  CHECK(zeta_poly(4, 3, table) == IntPolynomial{1, -10, 9});
  CHECK(zeta_poly(5, 2, table) == IntPolynomial{1, -5, 68, -64});
  CHECK(zeta_poly(6, 2, table) == IntPolynomial{1, 7, -8});
  CHECK(zeta_poly(6, 3, table) == IntPolynomial{1, 26, -27});
  CHECK(zeta_poly(8, 2, table) == IntPolynomial{1, -17, 16});
}

TEST_CASE("middle factors") {
  MomentTable table(12);
  CHECK(mid_poly(6, 5, table) == IntPolynomial{1, -150, 78125});
  CHECK(mid_poly(5, 2, table) == IntPolynomial{1, -4, 64});
  CHECK(mid_poly(3, 3, table) == IntPolynomial::one());
  CHECK(mid_poly(6, 2, table) == IntPolynomial::one());
  CHECK(mid_poly(8, 2, table) == IntPolynomial::one());
  for (std::uint64_t p : {2, 3, 5})
    CHECK(mid_poly(4, p, table) == IntPolynomial::one());

  for (std::uint64_t p : primes_upto(50)) {
    mpz_class p2 = mpz_class(p) * static_cast<long>(p);
    CHECK(mid_poly(3, p, table) ==
          IntPolynomial(std::vector<mpz_class>{1, -chi3(p) * p2}));
  }
}

TEST_CASE("both middle factor routes agree") {
  MomentTable table(12);
  std::vector<std::pair<int, std::uint64_t>> grid;
  for (int k = 1; k <= 8; ++k)
    for (std::uint64_t p : {2, 3, 5, 7}) grid.emplace_back(k, p);
  grid.emplace_back(9, 3);
  grid.emplace_back(11, 3);
  for (auto [k, p] : grid) CHECK(mid_poly(k, p, table) == mid_poly_direct(k, p, table));
}

TEST_CASE("weil certification accepts pure factors") {
  MomentTable table(12);
  CHECK(weil_certify(IntPolynomial{1, 25}, 3, 5).passed);
  CHECK(weil_certify(IntPolynomial{1, -49}, 3, 7).passed);
  CHECK(weil_certify(mid_poly(5, 2, table), 5, 2).passed);
  CHECK(weil_certify(mid_poly(6, 5, table), 6, 5).passed);
  CHECK(weil_certify(IntPolynomial::one(), 4, 3).passed);
}

TEST_CASE("weil certification rejects impure factors") {
  // The full zeta polynomial keeps the reciprocal root 1 of weight 0.
  CHECK_FALSE(weil_certify(IntPolynomial{1, 24, -25}, 3, 5).passed);
  // Tampered coefficient breaks the reciprocity identity.
  CHECK_FALSE(weil_certify(IntPolynomial{1, 24}, 3, 5).passed);
  CHECK_FALSE(weil_certify(IntPolynomial{1, -4, 65}, 5, 2).passed);

  // Reciprocity holds but the roots are real and off the circle; only the
  // numeric witness sees it, which is why the two routes stay separate.
  IntPolynomial wide{1, 300, 625};
  CHECK(weil_certify(wide, 3, 5, false).passed);
  CHECK_FALSE(weil_certify(wide, 3, 5, true).passed);
}

TEST_CASE("reciprocal roots of small polynomials") {
  auto roots = reciprocal_roots(IntPolynomial{1, -3, 2});  // (1-T)(1-2T)
  REQUIRE(roots.size() == 2);
  double lo = std::min(std::abs(roots[0]), std::abs(roots[1]));
  double hi = std::max(std::abs(roots[0]), std::abs(roots[1]));
  CHECK(lo == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(hi == doctest::Approx(2.0).epsilon(1e-9));

  // (1-(1+i)T)(1-(1-i)T): conjugate pair of modulus sqrt 2.
  for (const auto& g : reciprocal_roots(IntPolynomial{1, -2, 2}))
    CHECK(std::abs(g) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));

  CHECK(reciprocal_roots(IntPolynomial::one()).empty());
  CHECK_THROWS_AS((void)reciprocal_roots(IntPolynomial{2, 1}), Error);
}

TEST_CASE("next-moment prediction against direct enumeration") {
  MomentTable table(12);
  auto p35 = predict_next_moment(zeta_poly(3, 5, table), 3, 5, table);
  CHECK(p35.predicted == 15624);  // -(1 + (-25)^3)
  CHECK(p35.match);

  auto p43 = predict_next_moment(zeta_poly(4, 3, table), 4, 3, table);
  CHECK(p43.predicted == -730);  // -(1 + 9^3)
  CHECK(p43.match);

  auto p62 = predict_next_moment(zeta_poly(6, 2, table), 6, 2, table);
  CHECK(p62.predicted == 511);  // -(1 + (-8)^3)
  CHECK(p62.match);

  // 131^3 exceeds the default enumeration budget.
  IntPolynomial z = zeta_poly(3, 131, table);
  CHECK(z == IntPolynomial{1, 17160, -17161});
  CHECK_THROWS_AS((void)predict_next_moment(z, 3, 131, table), Error);
}

TEST_CASE("trace identity at unramified primes") {
  MomentTable table(12);
  CHECK(trace_identity_check(3, 7, mid_poly(3, 7, table), table).passed);
  CHECK(trace_identity_check(4, 5, mid_poly(4, 5, table), table).passed);
  CHECK(trace_identity_check(6, 5, mid_poly(6, 5, table), table).passed);
  CHECK(trace_identity_check(5, 2, mid_poly(5, 2, table), table).passed);

  CHECK_FALSE(trace_identity_check(3, 3, mid_poly(3, 3, table), table).passed);
  CHECK_FALSE(trace_identity_check(3, 7, IntPolynomial{1, -48}, table).passed);
}

TEST_CASE("unramified classification") {
  CHECK(is_unramified(3, 2));
  CHECK(is_unramified(3, 5));
  CHECK(is_unramified(9, 11));
  CHECK_FALSE(is_unramified(3, 3));
  CHECK_FALSE(is_unramified(9, 7));
  CHECK_FALSE(is_unramified(6, 2));
  CHECK_FALSE(is_unramified(6, 3));
  CHECK(is_unramified(6, 5));
  CHECK(is_unramified(8, 5));
  CHECK_FALSE(is_unramified(8, 3));
  CHECK(is_unramified(12, 7));
  CHECK_FALSE(is_unramified(12, 5));
}

TEST_CASE("euler records run the full battery") {
  MomentTable table(12);

  EulerFactorRecord r35 = build_euler_record(3, 5, table);
  CHECK(r35.all_passed());
  CHECK(r35.M == IntPolynomial{1, 25});
  CHECK(r35.Z == IntPolynomial{1, 24, -25});
  CHECK(r35.moments.size() == 3);
  CHECK(r35.moments[1] == 24);
  CHECK(r35.checks.count("trace") == 1);
  CHECK(r35.checks.count("predict") == 1);

  EulerFactorRecord r63 = build_euler_record(6, 3, table);
  CHECK(r63.all_passed());
  CHECK(r63.M == IntPolynomial::one());
  CHECK(r63.checks.count("trace") == 0);  // 2p <= k, so no trace identity

  EulerFactorRecord r93 = build_euler_record(9, 3, table);
  CHECK(r93.all_passed());
  CHECK(r93.M.degree() == 2);

  // With prediction disabled the key is absent rather than false.
  EulerFarmOptions opts;
  opts.run_predict = false;
  CHECK(build_euler_record(3, 5, table, opts).checks.count("predict") == 0);

  // Over-budget prediction is skipped, not failed.
  EulerFactorRecord r131 = build_euler_record(3, 131, table);
  CHECK(r131.checks.count("predict") == 0);
  CHECK(r131.all_passed());
}
