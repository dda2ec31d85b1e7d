#include "klsym/arith/convolution.hpp"

#include <cassert>

#include "klsym/error.hpp"
#include "parallel.hpp"

namespace klsym {

namespace {

constexpr std::uint64_t kMod = 998244353;  // 119 * 2^23 + 1
constexpr std::uint64_t kRoot = 3;
constexpr std::size_t kMaxTransform = std::size_t{1} << 23;

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  a %= kMod;
  while (e) {
    if (e & 1) r = r * a % kMod;
    a = a * a % kMod;
    e >>= 1;
  }
  return r;
}

void ntt_inplace(std::vector<std::uint32_t>& a, bool inverse) {
  const std::size_t n = a.size();
  assert((n & (n - 1)) == 0);
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint64_t w = powmod(kRoot, (kMod - 1) / len);
    if (inverse) w = powmod(w, kMod - 2);
    for (std::size_t i = 0; i < n; i += len) {
      std::uint64_t wn = 1;
      for (std::size_t j = 0; j < len / 2; ++j) {
        std::uint64_t u = a[i + j];
        std::uint64_t v = a[i + j + len / 2] * wn % kMod;
        a[i + j] = static_cast<std::uint32_t>(u + v < kMod ? u + v : u + v - kMod);
        a[i + j + len / 2] = static_cast<std::uint32_t>(u >= v ? u - v : u + kMod - v);
        wn = wn * w % kMod;
      }
    }
  }
  if (inverse) {
    std::uint64_t ninv = powmod(n % kMod, kMod - 2);
    for (auto& x : a) x = static_cast<std::uint32_t>(x * ninv % kMod);
  }
}

std::size_t padded_size(std::size_t need) {
  std::size_t n = 1;
  while (n < need) n <<= 1;
  check(n <= kMaxTransform, errc::budget_exceeded, "transform size beyond NTT capacity");
  return n;
}

}  // namespace

std::vector<std::uint32_t> ntt_linear_convolution(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::size_t out = a.size() + b.size() - 1;
  std::size_t n = padded_size(out);
  std::vector<std::uint32_t> fa(n, 0), fb(n, 0);
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  ntt_inplace(fa, false);
  ntt_inplace(fb, false);
  for (std::size_t i = 0; i < n; ++i)
    fa[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(fa[i]) * fb[i] % kMod);
  ntt_inplace(fa, true);
  fa.resize(out);
  return fa;
}

std::vector<std::vector<std::uint32_t>> cyclic_pair_tallies(const std::vector<std::uint8_t>& h,
                                                            std::uint32_t p, unsigned threads) {
  const std::size_t L = h.size();
  check(L >= 1, errc::precondition, "empty residue sequence");
  // Tally entries are bounded by L and must stay below the NTT modulus.
  check(L < (std::size_t{1} << 27), errc::budget_exceeded, "sequence too long for exact tallies");
  const std::size_t n = padded_size(2 * L - 1);

  // Forward spectra of the residue indicators.
  std::vector<std::vector<std::uint32_t>> spectra(p);
  detail::parallel_chunks(p, threads, [&](unsigned, std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t u = b; u < e; ++u) {
      auto& s = spectra[u];
      s.assign(n, 0);
      for (std::size_t i = 0; i < L; ++i)
        if (h[i] == u) s[i] = 1;
      ntt_inplace(s, false);
    }
  });

  std::vector<std::vector<std::uint32_t>> tallies(p);
  detail::parallel_chunks(p, threads, [&](unsigned, std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t c = b; c < e; ++c) {
      std::vector<std::uint32_t> acc(n, 0);
      for (std::uint32_t u = 0; u < p; ++u) {
        const auto& su = spectra[u];
        const auto& sv = spectra[(c + p - u) % p];
        for (std::size_t i = 0; i < n; ++i) {
          std::uint64_t t = acc[i] + static_cast<std::uint64_t>(su[i]) * sv[i] % kMod;
          acc[i] = static_cast<std::uint32_t>(t < kMod ? t : t - kMod);
        }
      }
      ntt_inplace(acc, true);
      // Fold the linear convolution back onto the cycle of length L.
      auto& t = tallies[c];
      t.assign(L, 0);
      for (std::size_t j = 0; j < 2 * L - 1; ++j) {
        std::size_t k = j < L ? j : j - L;
        t[k] += acc[j];
      }
    }
  });

  return tallies;
}

void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  check((n & (n - 1)) == 0, errc::precondition, "FFT size must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const double pi = 3.14159265358979323846;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    double ang = 2 * pi / static_cast<double>(len) * (inverse ? -1 : 1);
    std::complex<double> w(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> wn(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        std::complex<double> u = a[i + j];
        std::complex<double> v = a[i + j + len / 2] * wn;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        wn *= w;
      }
    }
  }
  if (inverse)
    for (auto& x : a) x /= static_cast<double>(n);
}

}  // namespace klsym
