#pragma once

#include <cstdint>
#include <vector>

#include "klsym/arith/cyclotomic.hpp"
#include "klsym/arith/extfield.hpp"

namespace klsym {

// Kl(a; F_q) = sum over x in F_q^* of zeta_p^{tr(x + a/x)}, a != 0.
CyclotomicInt kloosterman_exact(const ExtField& F, std::uint64_t a);

// Character tallies for the whole family at once:
// result[c][j] = #{ x in F_q^* : tr(x + g^j/x) = c }, g the stored generator,
// so Kl(g^j) = sum_c result[c][j] zeta^c. Small fields are enumerated
// directly; larger ones go through the exact NTT pair-tally convolution.
std::vector<std::vector<std::uint32_t>> kloosterman_tallies(const ExtField& F,
                                                            unsigned threads = 1);

// Floating-point Kl(g^j) for all j via one complex FFT self-convolution.
// The values are exact counts contaminated only by FFT roundoff; callers
// needing guarantees must stay inside their own precision envelope.
std::vector<double> kloosterman_all_bulk(const ExtField& F);

}  // namespace klsym
