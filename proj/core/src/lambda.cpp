#include "klsym/lfunction/lambda.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "klsym/error.hpp"
#include "klsym/lfunction/oracles.hpp"

namespace klsym {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;

// Lanczos with g = 7 and 9 terms, relative error near 1e-15 for
// Re z >= 1/2; the reflection branch extends it left of that line. Only
// exp(lgamma) is ever consumed, so branch choices in the logs cancel.
cplx lgamma_cplx(cplx z) {
  static const double kC[9] = {0.99999999999980993,     676.5203681218851,
                               -1259.1392167224028,     771.32342877765313,
                               -176.61502916214059,     12.507343278686905,
                               -0.13857109526572012,    9.9843695780195716e-6,
                               1.5056327351493116e-7};
  if (z.real() < 0.5)
    return std::log(kPi) - std::log(std::sin(kPi * z)) - lgamma_cplx(1.0 - z);
  cplx acc = kC[0];
  for (int i = 1; i < 9; ++i) acc += kC[i] / (z + double(i - 1));
  cplx t = z + 6.5;
  return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(t) - t + std::log(acc);
}

// Node values along one vertical line Re u = c, shared by every n whose
// saddle quantizes to that line:
//   v_j = exp( sum_sh lgamma((s + u_j - sh)/2) + u_j^2 - [log u_j] ),
// u_j = c + i j step. Trailing nodes below 1e-22 of the peak are dropped.
struct ContourLine {
  double c = 0;
  int half_nodes = 0;
  std::vector<cplx> v;  // v[idx], idx = j + half_nodes
};

constexpr double kQuantum = 0.25;

struct LineTable {
  cplx s;
  std::vector<int> shifts;
  double step = 0;
  int nominal_half = 0;
  bool pole_kernel = false;
  std::map<int, ContourLine> lines;

  const ContourLine& line(double c_raw) {
    int key = static_cast<int>(std::ceil(c_raw / kQuantum - 1e-12));
    auto it = lines.find(key);
    if (it != lines.end()) return it->second;

    ContourLine out;
    out.c = key * kQuantum;
    std::vector<cplx> full(2 * nominal_half + 1);
    double vmax = 0;
    for (int j = -nominal_half; j <= nominal_half; ++j) {
      cplx u(out.c, j * step);
      cplx w = u * u;
      for (int sh : shifts) w += lgamma_cplx(0.5 * (s + u - double(sh)));
      if (pole_kernel) w -= std::log(u);
      cplx val = std::exp(w);
      full[j + nominal_half] = val;
      vmax = std::max(vmax, std::abs(val));
    }
    check(std::isfinite(vmax) && vmax > 0, errc::quadrature_diverged,
          "gamma-kernel nodes are not finite");
    int keep = 0;
    for (int j = 0; j <= nominal_half; ++j)
      if (std::abs(full[nominal_half + j]) >= 1e-22 * vmax ||
          std::abs(full[nominal_half - j]) >= 1e-22 * vmax)
        keep = j;
    out.half_nodes = keep;
    out.v.assign(full.begin() + (nominal_half - keep),
                 full.begin() + (nominal_half + keep + 1));
    return lines.emplace(key, std::move(out)).first->second;
  }
};

struct HalfSum {
  cplx sum{0.0, 0.0};
  double abs_sum = 0;
  double tail = 0;
  long terms = 0;
};

// sum_n a_n (step/2pi) sum_j v_j nhat^{-(s + c + i t_j)} over the contour
// whose saddle c ~ max(floor, ln(nhat)/2) recenters the integrand so the
// trapezoid aliases and the truncated tails both sit below 1e-15. Stops
// once 48 consecutive terms fall under 1e-16 of the largest; hitting the
// coefficient cap instead is accepted only if the last window is already
// below 1e-9 of the largest term.
HalfSum one_sided(const LFunctionSpec& spec, const std::vector<double>& a, cplx s,
                  const QuadratureParams& p, bool pole_kernel) {
  int m = static_cast<int>(spec.gamma_shifts.size());
  double rt = std::sqrt(std::pow(kPi, m) / spec.conductor.get_d());
  double sigma = s.real();
  // The 1/u factor widens the integrand's spectral tail to exp(-2 pi c/step),
  // so the value route keeps the contour at least two units right of the pole.
  double floor_c = pole_kernel ? std::max(p.contour_floor, 2.0) : p.contour_floor;

  LineTable table;
  table.s = s;
  table.shifts = spec.gamma_shifts;
  table.step = p.step;
  table.nominal_half = static_cast<int>(std::lround(p.height / p.step));
  table.pole_kernel = pole_kernel;

  const long N = static_cast<long>(a.size()) - 1;
  const double node_weight = p.step / (2.0 * kPi);

  HalfSum out;
  double max_term = 0;
  double ring[48] = {0};
  int consecutive = 0;
  bool broke = false;

  long n = 1;
  for (; n <= N; ++n) {
    double abs_t = 0;
    if (a[n] != 0.0) {
      double L = std::log(double(n) * rt);
      double c_raw = std::max({floor_c, double(m) + 0.5 - sigma, 0.5 * L});
      const ContourLine& line = table.line(c_raw);
      cplx omega = std::exp(cplx(0.0, -p.step * L));
      cplx phase = std::exp(cplx(0.0, line.half_nodes * p.step * L));
      cplx inner{0.0, 0.0};
      for (const cplx& v : line.v) {
        inner += v * phase;
        phase *= omega;
      }
      cplx term = (a[n] * node_weight) * std::exp(-(s + line.c) * L) * inner;
      check(std::isfinite(term.real()) && std::isfinite(term.imag()),
            errc::quadrature_diverged, "non-finite term in smoothed sum");
      out.sum += term;
      abs_t = std::abs(term);
      out.abs_sum += abs_t;
      max_term = std::max(max_term, abs_t);
    }
    ring[n % 48] = abs_t;
    if (n >= 64) {
      consecutive = (abs_t < 1e-16 * max_term) ? consecutive + 1 : 0;
      if (consecutive >= 48) {
        broke = true;
        break;
      }
    }
  }
  out.terms = std::min(n, N);

  if (broke) {
    out.tail = max_term * 1e-14;
  } else {
    double window_max = *std::max_element(ring, ring + 48);
    check(window_max <= 1e-9 * max_term, errc::truncation_too_small,
          "coefficient cap reached before the smoothed sum settled");
    out.tail = window_max * 10.0;
  }
  out.tail += 1e-14 * out.abs_sum;
  return out;
}

std::vector<double> coefficient_doubles(const LFunctionSpec& spec, cplx s,
                                        const QuadratureParams& p) {
  double cap =
      p.truncation_scale * std::sqrt(spec.conductor.get_d()) * (1.0 + std::abs(s.imag()));
  long N = static_cast<long>(std::ceil(cap));
  N = std::min<long>(N, static_cast<long>(spec.pmax));
  N = std::max<long>(N, 1);
  DirichletCoefficients dc = dirichlet_coefficients(spec, N);
  std::vector<double> a(static_cast<std::size_t>(N) + 1, 0.0);
  for (long n = 1; n <= N; ++n) a[static_cast<std::size_t>(n)] = dc.a[n].get_d();
  return a;
}

}  // namespace

LambdaValue completed_lambda(const LFunctionSpec& spec, std::complex<double> s,
                             const QuadratureParams& params) {
  cplx sr = cplx(double(spec.reflection), 0.0) - s;
  std::vector<double> a = coefficient_doubles(spec, s, params);
  HalfSum h1 = one_sided(spec, a, s, params, true);
  HalfSum h2 = one_sided(spec, a, sr, params, true);
  LambdaValue out;
  out.value = h1.sum + double(spec.sign) * h2.sum;
  out.error_estimate = h1.tail + h2.tail;
  out.terms_used = std::max(h1.terms, h2.terms);
  return out;
}

double fe_defect(const LFunctionSpec& spec, std::complex<double> s,
                 const QuadratureParams& params) {
  cplx sr = cplx(double(spec.reflection), 0.0) - s;
  std::vector<double> a = coefficient_doubles(spec, s, params);
  cplx g1 = one_sided(spec, a, s, params, false).sum;
  cplx g2 = one_sided(spec, a, sr, params, false).sum;
  double denom = std::max({std::abs(g1), std::abs(g2), 1e-30});
  return std::abs(g1 - double(spec.sign) * g2) / denom;
}

std::complex<double> lambda3_closed_form(std::complex<double> s) {
  cplx pref = std::exp(0.5 * s * std::log(3.0 / kPi));
  cplx gam = std::exp(lgamma_cplx(0.5 * (s - 1.0)));
  return pref * gam * dirichlet_L_chi3(s - 2.0);
}

}  // namespace klsym
