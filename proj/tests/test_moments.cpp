#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <vector>

#include "klsym/arith/numtheory.hpp"
#include "klsym/error.hpp"
#include "klsym/moments/kloosterman.hpp"
#include "klsym/moments/moments.hpp"

using namespace klsym;

namespace {
// Numeric image of a cyclotomic integer under zeta -> exp(2 pi i / p).
double embed_real(const CyclotomicInt& v) {
  const double pi = 3.14159265358979323846;
  double re = 0;
  for (std::uint32_t i = 0; i + 1 < v.p(); ++i)
    re += mpz_class(v.coords()[i]).get_d() * std::cos(2 * pi * i / v.p());
  return re;
}
}  // namespace

TEST_CASE("Kloosterman sums over tiny fields") {
  ExtField F2 = ExtField::build(2, 1);
  CHECK(kloosterman_exact(F2, 1).to_integer() == 1);

  ExtField F3 = ExtField::build(3, 1);
  CHECK(kloosterman_exact(F3, 1).to_integer() == -1);
  CHECK(kloosterman_exact(F3, 2).to_integer() == 2);

  ExtField F4 = ExtField::build(2, 2);
  CHECK(kloosterman_exact(F4, 1).to_integer() == 3);
  // The two non-identity elements form one Frobenius orbit.
  CHECK(kloosterman_exact(F4, 2).to_integer() == -1);
  CHECK(kloosterman_exact(F4, 3).to_integer() == -1);

  CHECK_THROWS_AS((void)kloosterman_exact(F3, 0), Error);
}

TEST_CASE("Kloosterman sums are fixed by x -> a/x and bounded by 2 sqrt q") {
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, int>>{{5, 1}, {7, 1}, {3, 2}, {2, 4}}) {
    ExtField F = ExtField::build(p, n);
    for (std::uint64_t a = 1; a < F.q(); ++a) {
      CyclotomicInt kl = kloosterman_exact(F, a);
      // Galois-stability of the value under c -> c is trivial; reality of
      // the sum shows up as invariance under negating the character index.
      CHECK(kl.galois(F.p() - 1) == kl);
    }
  }
}

TEST_CASE("bulk float Kloosterman values agree with the exact path") {
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, int>>{
           {2, 1}, {3, 1}, {2, 2}, {7, 1}, {5, 2}, {3, 4}, {2, 8}, {101, 1}}) {
    ExtField F = ExtField::build(p, n);
    auto kl = kloosterman_all_bulk(F);
    REQUIRE(kl.size() == F.q() - 1);
    double sum = 0;
    for (std::uint64_t j = 0; j < F.q() - 1; ++j) {
      sum += kl[j];
      CHECK(std::abs(kl[j]) <= 2 * std::sqrt(double(F.q())) + 1e-6);
    }
    // sum over a of Kl(a;q) = 1 by orthogonality.
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    for (std::uint64_t j = 0; j < F.q() - 1; ++j) {
      CyclotomicInt exact = kloosterman_exact(F, F.element(j));
      CHECK(kl[j] == doctest::Approx(embed_real(exact)).epsilon(1e-8).scale(1.0));
    }
  }
}

TEST_CASE("symmetric power traces") {
  mpz_class q3(3), q2(2);
  CHECK(sym_power_trace(0, mpz_class(17), q3) == 1);
  CHECK(sym_power_trace(1, mpz_class(17), q3) == 17);
  CHECK(sym_power_trace(3, mpz_class(1), q3) == -5);
  CHECK(sym_power_trace(3, mpz_class(-2), q3) == 4);
  CHECK(sym_power_trace(6, mpz_class(-1), q2) == 7);

  // Closed form sum_{j <= k/2} (-1)^j C(k-j, j) q^j t^{k-2j}.
  for (int k = 0; k <= 12; ++k) {
    for (long tv = -5; tv <= 5; ++tv) {
      mpz_class t(tv), expect = 0;
      for (int j = 0; 2 * j <= k; ++j) {
        mpz_class term = binomial(k - j, j) * pow_mpz(mpz_class(3), j) *
                         pow_mpz(t, k - 2 * j);
        expect += (j % 2 == 0) ? term : -term;
      }
      CHECK(sym_power_trace(k, t, q3) == expect);
    }
  }

  // The cyclotomic overload restricts to the integer one on rationals.
  CyclotomicInt t5 = CyclotomicInt::integer(5, -2);
  CHECK(sym_power_trace(4, t5, mpz_class(5)).to_integer() ==
        sym_power_trace(4, mpz_class(-2), mpz_class(5)));
}

TEST_CASE("frozen moment values") {
  ExtField F2 = ExtField::build(2, 1);
  ExtField F3 = ExtField::build(3, 1);
  ExtField F4 = ExtField::build(2, 2);
  ExtField F7 = ExtField::build(7, 1);
  CHECK(moment(3, F3) == -1);
  CHECK(moment(3, F7) == -50);
  CHECK(moment(5, F2) == -5);
  CHECK(moment(6, F2) == 7);
  CHECK(moment(6, F4) == -65);
}

TEST_CASE("low moments have forced values") {
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, int>>{
           {2, 1}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {5, 2}}) {
    ExtField F = ExtField::build(p, n);
    mpz_class q(F.q());
    CHECK(moment(0, F) == q - 1);
    CHECK(moment(1, F) == -1);
    // Z_2 = 1 - T forces m_2^2(q) = -1 for every q.
    CHECK(moment(2, F) == -1);
    if (p > 2) CHECK(moment(4, F) == -1 - q * q);
  }
}

TEST_CASE("production and reference moment paths agree") {
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, int>>{
           {2, 1}, {2, 5}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {3, 3}}) {
    ExtField F = ExtField::build(p, n);
    for (int k : {1, 2, 3, 5, 6, 8}) {
      CHECK(moment(k, F) == moment_reference(k, F));
    }
  }
}

TEST_CASE("moments are invariant under additive character change") {
  for (std::uint64_t p : {3, 5, 7}) {
    ExtField F = ExtField::build(p, 1);
    mpz_class q(p);
    for (std::uint32_t c = 1; c < p; ++c) {
      for (int k : {3, 4, 5}) {
        CyclotomicInt acc = CyclotomicInt::integer(p, 0);
        for (std::uint64_t a = 1; a < p; ++a) {
          CyclotomicInt t = -kloosterman_exact(F, a).galois(c);
          acc = acc + sym_power_trace(k, t, q);
        }
        CHECK(acc.to_integer() == moment(k, F));
      }
    }
  }
}

TEST_CASE("moments do not depend on the field presentation") {
  // x^2 + 1 and x^2 + x + 2 are both irreducible over F_3.
  ExtField A = ExtField::build_with(3, 2, std::vector<std::uint32_t>{1, 0}, std::nullopt);
  ExtField B = ExtField::build_with(3, 2, std::vector<std::uint32_t>{2, 1}, std::nullopt);
  CHECK(A.modulus() != B.modulus());
  for (int k = 1; k <= 8; ++k) CHECK(moment(k, A) == moment(k, B));

  // Different generator over the same modulus.
  ExtField F = ExtField::build(5, 2);
  std::uint64_t g2 = F.pow(F.generator(), 7);  // 7 coprime to 24
  ExtField G = ExtField::build_with(5, 2, std::nullopt, g2);
  CHECK(G.generator() != F.generator());
  for (int k = 1; k <= 8; ++k) CHECK(moment(k, F) == moment(k, G));
}

TEST_CASE("moment table memoizes per prime power") {
  MomentTable table(10);
  CHECK(table.moment(3, 7, 1) == -50);
  CHECK(table.moment(6, 2, 1) == 7);
  CHECK(table.moment(6, 2, 2) == -65);
  CHECK(table.moment(1, 5, 3) == -1);
  CHECK(table.power_sums(7, 1)[0] == 6);
  CHECK_THROWS_AS((void)table.moment(11, 3, 1), Error);
  ExtField F7 = ExtField::build(7, 1);
  CHECK(table.moment(8, 7, 1) == moment(8, F7));
}

TEST_CASE("power sum family values") {
  ExtField F = ExtField::build(11, 1);
  auto P = power_sum_family(F, 6);
  CHECK(P[0] == 10);
  CHECK(P[1] == -1);
  // Individual summands live in Z[zeta_11]; only the total is rational.
  CyclotomicInt acc = CyclotomicInt::integer(11, 0);
  for (std::uint64_t a = 1; a < 11; ++a) {
    CyclotomicInt t = -kloosterman_exact(F, a);
    acc = acc + t * t * t;
  }
  CHECK(P[3] == acc.to_integer());
}

TEST_CASE("NTT tally path on a field past the direct threshold") {
  // 3^8 - 1 = 6560 crosses into the convolution tally path.
  ExtField F = ExtField::build(3, 8);
  mpz_class q(F.q());
  auto P = power_sum_family(F, 4);
  CHECK(P[0] == q - 1);
  CHECK(P[1] == -1);
  CHECK(moment_from_power_sums(2, q, P) == -1);
  CHECK(moment_from_power_sums(4, q, P) == -1 - q * q);

  // Tally columns reproduce individual Kloosterman sums.
  auto tallies = kloosterman_tallies(F);
  for (std::uint64_t j : {0ull, 1ull, 17ull, 6000ull}) {
    std::vector<mpz_class> col(F.p());
    for (std::uint32_t c = 0; c < F.p(); ++c) col[c] = tallies[c][j];
    CHECK(CyclotomicInt::from_tally(F.p(), col) ==
          kloosterman_exact(F, F.element(j)));
  }
}
