#pragma once

#include <complex>

#include "klsym/lfunction/lspec.hpp"

namespace klsym {

// Contour and truncation controls for the smoothed vertical-line sums.
struct QuadratureParams {
  double step = 0.25;    // trapezoid spacing along the contour
  double height = 40.0;  // nominal half-height; near-zero nodes are trimmed
  double contour_floor = 1.0;
  double truncation_scale = 80000.0;  // n-cap per sqrt(conductor) per unit height
};

struct LambdaValue {
  std::complex<double> value;
  double error_estimate;  // truncation tail plus accumulated rounding
  long terms_used;        // largest n summed on either side
};

// Lambda(s) = (C/pi^m)^{s/2} prod_j Gamma((s-j)/2) L(s) computed as
//   sum_n a_n F(s,n) + sign * sum_n a_n F(reflection-s, n),
// F the Gaussian-kernel Mellin cutoff with a simple pole at the origin.
// The split is symmetric under s -> reflection-s by construction whenever
// sign^2 = 1, so agreement of the two half-sums says nothing about the
// reflection identity itself; fe_defect is the test for that.
LambdaValue completed_lambda(const LFunctionSpec& spec, std::complex<double> s,
                             const QuadratureParams& params = {});

// Gaussian-window average G(s) of Lambda along a vertical line, computed
// from the Dirichlet side alone (no reflection used). G satisfies
// G(s) = sign * G(reflection-s) iff Lambda is entire and satisfies the
// claimed identity, so the returned
//   |G(s) - sign G(reflection-s)| / max(|G(s)|, |G(reflection-s)|, 1e-30)
// is O(1) for a wrong sign or conductor and at quadrature level otherwise.
double fe_defect(const LFunctionSpec& spec, std::complex<double> s,
                 const QuadratureParams& params = {});

// Independent comparator for k = 3:
//   (3/pi)^{s/2} Gamma((s-1)/2) L(chi3, s-2).
std::complex<double> lambda3_closed_form(std::complex<double> s);

}  // namespace klsym
