#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace klsym {

// Exact linear convolution of nonnegative sequences.  Requires every entry
// of the result to stay below the NTT modulus 998244353; inputs sized so that
// the padded transform fits 2^23.
std::vector<std::uint32_t> ntt_linear_convolution(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b);

// Residue pair tallies around the cycle Z/L: given h[0..L) with values in
// [0, p), returns T where T[c][j] = #{(i1, i2) : i1 + i2 = j (mod L),
// h[i1] + h[i2] = c (mod p)}.  Exact; NTT backed; O(p) transforms.
std::vector<std::vector<std::uint32_t>> cyclic_pair_tallies(
    const std::vector<std::uint8_t>& h, std::uint32_t p, unsigned threads = 1);

// In-place radix-2 complex FFT; size must be a power of two.  The inverse
// transform includes the 1/n normalization.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

}  // namespace klsym
