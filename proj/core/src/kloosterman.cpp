#include "klsym/moments/kloosterman.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "klsym/arith/convolution.hpp"
#include "klsym/error.hpp"
#include "parallel.hpp"

namespace klsym {

namespace {

// Below this group order the quadratic direct tally beats the NTT setup.
constexpr std::uint64_t kDirectTallyLimit = 4096;

std::vector<std::vector<std::uint32_t>> direct_tallies(const std::vector<std::uint8_t>& h,
                                                       std::uint32_t p, unsigned threads) {
  const std::uint64_t L = h.size();
  std::vector<std::vector<std::uint32_t>> tallies(p);
  for (auto& t : tallies) t.assign(L, 0);
  detail::parallel_chunks(L, threads, [&](unsigned, std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t j = b; j < e; ++j) {
      for (std::uint64_t i = 0; i < L; ++i) {
        unsigned c = h[i] + h[j >= i ? j - i : j + L - i];
        if (c >= p) c -= p;
        ++tallies[c][j];
      }
    }
  });
  return tallies;
}

}  // namespace

CyclotomicInt kloosterman_exact(const ExtField& F, std::uint64_t a) {
  check(a != 0 && a < F.q(), errc::precondition, "a must be a nonzero field element");
  const auto& h = F.trace_of_power();
  const std::uint64_t L = F.q() - 1;
  const std::uint64_t j = F.dlog(a);
  std::vector<mpz_class> tally(F.p(), 0);
  for (std::uint64_t i = 0; i < L; ++i) {
    unsigned c = h[i] + h[j >= i ? j - i : j + L - i];
    if (c >= F.p()) c -= F.p();
    tally[c] += 1;
  }
  return CyclotomicInt::from_tally(F.p(), tally);
}

std::vector<std::vector<std::uint32_t>> kloosterman_tallies(const ExtField& F,
                                                            unsigned threads) {
  const auto& h = F.trace_of_power();
  if (h.size() <= kDirectTallyLimit) return direct_tallies(h, F.p(), threads);
  return cyclic_pair_tallies(h, F.p(), threads);
}

std::vector<double> kloosterman_all_bulk(const ExtField& F) {
  const auto& h = F.trace_of_power();
  const std::size_t L = h.size();
  std::size_t n = 1;
  while (n < 2 * L - 1) n <<= 1;
  check(n <= (std::size_t{1} << 23), errc::budget_exceeded, "field too large for FFT path");

  const double pi = 3.14159265358979323846;
  std::vector<std::complex<double>> roots(F.p());
  for (std::uint32_t c = 0; c < F.p(); ++c) {
    double ang = 2 * pi * c / F.p();
    roots[c] = {std::cos(ang), std::sin(ang)};
  }
  std::vector<std::complex<double>> f(n, 0.0);
  for (std::size_t i = 0; i < L; ++i) f[i] = roots[h[i]];
  fft_inplace(f, false);
  for (auto& x : f) x *= x;
  fft_inplace(f, true);

  std::vector<double> kl(L);
  for (std::size_t j = 0; j < L; ++j) {
    std::complex<double> v = f[j];
    if (j + L < 2 * L - 1) v += f[j + L];
    kl[j] = v.real();
  }
  return kl;
}

}  // namespace klsym
