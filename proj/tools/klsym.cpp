// Command line frontend: exact moments, certified Euler factors with a
// persistent cache, motivic invariants, de Rham bases, and functional
// equation checks for symmetric powers of Kl_2.

#include <atomic>
#include <chrono>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "klsym/arith/numtheory.hpp"
#include "klsym/derham/derham.hpp"
#include "klsym/error.hpp"
#include "klsym/invariants/conductor.hpp"
#include "klsym/invariants/gamma.hpp"
#include "klsym/invariants/hodge.hpp"
#include "klsym/lfunction/cache.hpp"
#include "klsym/lfunction/lambda.hpp"
#include "klsym/lfunction/lspec.hpp"
#include "klsym/local/euler.hpp"
#include "klsym/moments/moments.hpp"

using namespace klsym;
using nlohmann::json;
using cplx = std::complex<double>;

namespace {

enum class Fmt { human, js, csv };

std::vector<std::string> coeff_strings(const IntPolynomial& P) {
  std::vector<std::string> out;
  for (const mpz_class& c : P.coeffs()) out.push_back(c.get_str());
  return out;
}

json record_json(const EulerFactorRecord& r) {
  json j;
  j["k"] = r.k;
  j["p"] = r.p;
  j["Z"] = coeff_strings(r.Z);
  j["R"] = coeff_strings(r.R);
  j["M"] = coeff_strings(r.M);
  json mom = json::array();
  for (const mpz_class& m : r.moments) mom.push_back(m.get_str());
  j["moments"] = mom;
  j["checks"] = r.checks;
  j["all_passed"] = r.all_passed();
  return j;
}

std::string format_graded(const GradedElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ra, c] : x.terms) {
    const auto& [r, a] = ra;
    bool neg = sgn(c) < 0;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    mpq_class mag = neg ? mpq_class(-c) : c;
    if (mag != 1) os << mag.get_str() << "*";
    if (r == 1) os << "z*";
    if (r > 1) os << "z^" << r << "*";
    os << "eta_" << a;
  }
  return os.str();
}

json graded_json(const GradedElement& x) {
  json terms = json::array();
  for (const auto& [ra, c] : x.terms)
    terms.push_back({{"r", ra.first}, {"a", ra.second}, {"c", c.get_str()}});
  return terms;
}

// Machine-readable failure report; the stdout payload stays format-driven.
void emit_failure(const std::string& code, const std::string& message) {
  json j;
  j["error"] = {{"code", code}, {"message", message}};
  std::fprintf(stderr, "%s\n", j.dump().c_str());
}

struct FailedCheck {
  std::string what;
};

int finish(Fmt fmt, const json& payload, const std::vector<std::string>& failures) {
  if (fmt == Fmt::js) std::printf("%s\n", payload.dump(2).c_str());
  if (failures.empty()) return 0;
  std::ostringstream os;
  for (std::size_t i = 0; i < failures.size(); ++i)
    os << (i ? "; " : "") << failures[i];
  emit_failure("check_failed", os.str());
  return 1;
}

int cmd_moments(int k, std::uint64_t p, int n, std::uint64_t budget, unsigned jobs,
                Fmt fmt) {
  MomentTable table(k, budget, jobs);
  json rows = json::array();
  if (fmt == Fmt::csv) std::printf("i,q,moment\n");
  if (fmt == Fmt::human) std::printf("%4s  %-12s  %s\n", "i", "q", "moment");
  for (int i = 1; i <= n; ++i) {
    mpz_class q = pow_mpz(mpz_class(p), static_cast<unsigned>(i));
    mpz_class m = table.moment(k, p, i);
    if (fmt == Fmt::human)
      std::printf("%4d  %-12s  %s\n", i, q.get_str().c_str(), m.get_str().c_str());
    if (fmt == Fmt::csv)
      std::printf("%d,%s,%s\n", i, q.get_str().c_str(), m.get_str().c_str());
    rows.push_back({{"i", i}, {"q", q.get_str()}, {"value", m.get_str()}});
  }
  json payload = {{"k", k}, {"p", p}, {"moments", rows}};
  return finish(fmt, payload, {});
}

int cmd_euler(int k, std::uint64_t pmax, unsigned jobs, std::uint64_t budget,
              const std::string& cache_dir_flag, bool no_cache, Fmt fmt) {
  std::filesystem::path dir =
      cache_dir_flag.empty() ? cache_directory() : std::filesystem::path(cache_dir_flag);
  std::vector<std::uint64_t> primes = primes_upto(pmax);
  std::vector<EulerFactorRecord> records(primes.size());
  std::vector<bool> was_hit(primes.size(), false);

  unsigned n_workers = std::max(1u, std::min<unsigned>(jobs, primes.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n_workers);
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < n_workers; ++w)
    workers.emplace_back([&, w] {
      try {
        MomentTable table(k, budget, 1);
        for (std::size_t i; (i = next.fetch_add(1)) < primes.size();) {
          std::uint64_t p = primes[i];
          if (!no_cache) {
            if (auto hit = load_cached_record(dir, k, p)) {
              records[i] = std::move(*hit);
              was_hit[i] = true;
              continue;
            }
          }
          records[i] = build_euler_record(k, p, table);
          if (!no_cache) store_cached_record(dir, records[i]);
        }
      } catch (...) {
        errors[w] = std::current_exception();
        next.store(primes.size());
      }
    });
  for (std::thread& t : workers) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<std::string> failures;
  json rows = json::array();
  std::size_t hits = 0;
  if (fmt == Fmt::csv) std::printf("p,deg_Z,deg_M,all_passed,source,Z,M\n");
  if (fmt == Fmt::human)
    std::printf("%-6s %6s %6s  %-6s %-6s %s\n", "p", "deg Z", "deg M", "status",
                "source", "M(T)");
  for (std::size_t i = 0; i < records.size(); ++i) {
    const EulerFactorRecord& r = records[i];
    hits += was_hit[i] ? 1 : 0;
    if (!r.all_passed()) {
      std::ostringstream os;
      os << "certification failed at p=" << r.p << " (";
      bool first = true;
      for (const auto& [name, ok] : r.checks)
        if (!ok) {
          os << (first ? "" : ", ") << name;
          first = false;
        }
      os << ")";
      failures.push_back(os.str());
    }
    const char* source = was_hit[i] ? "cache" : "built";
    if (fmt == Fmt::human)
      std::printf("%-6llu %6d %6d  %-6s %-6s %s\n",
                  static_cast<unsigned long long>(r.p), r.Z.degree(), r.M.degree(),
                  r.all_passed() ? "ok" : "FAIL", source, r.M.str().c_str());
    if (fmt == Fmt::csv)
      std::printf("%llu,%d,%d,%d,%s,\"%s\",\"%s\"\n",
                  static_cast<unsigned long long>(r.p), r.Z.degree(), r.M.degree(),
                  r.all_passed() ? 1 : 0, source, r.Z.str().c_str(), r.M.str().c_str());
    json jr = record_json(r);
    jr["source"] = source;
    rows.push_back(jr);
  }
  if (fmt == Fmt::human)
    std::printf("%zu primes, %zu from cache, %zu built; cache %s\n", records.size(),
                hits, records.size() - hits, no_cache ? "(bypassed)" : dir.c_str());
  json payload = {{"k", k},
                  {"pmax", pmax},
                  {"cache_dir", no_cache ? "" : dir.string()},
                  {"cache_hits", hits},
                  {"records", rows},
                  {"all_passed", failures.empty()}};
  return finish(fmt, payload, failures);
}

const char* variant_name(HodgeVariant v) {
  switch (v) {
    case HodgeVariant::H1: return "H1";
    case HodgeVariant::H1_mid: return "H1_mid";
    case HodgeVariant::H1_tilde: return "H1_tilde";
    default: return "H1_mid_tilde";
  }
}

int cmd_invariants(int k, Fmt fmt) {
  Conductor c = conductor(k);
  GammaFactor g = gamma_factor(k);
  EpsilonSign e = epsilon_sign(k);
  HodgeDims d = dims(k);
  IrregularityData ir = irregularity_and_rigidity(k);
  Polygon poly = hodge_polygon_compact(k);

  auto shifts_str = [&] {
    std::ostringstream os;
    for (int s : g.shifts) os << " " << s;
    return g.shifts.empty() ? std::string(" none") : os.str();
  }();
  auto vertices_str = [&] {
    std::ostringstream os;
    for (const auto& [x, y] : poly.vertices) os << "(" << x << "," << y << ") ";
    return os.str();
  }();

  json payload = {{"k", k},
                  {"weight", k + 1},
                  {"conductor",
                   {{"value", c.value.get_str()},
                    {"odd_part", c.odd_part.get_str()},
                    {"two_exponent", c.two_exponent},
                    {"conjectural", c.conjectural}}},
                  {"gamma", {{"m", g.m}, {"shifts", g.shifts}}},
                  {"sign",
                   {{"value", e.sign},
                    {"conjectural", e.conjectural},
                    {"t_k", e.t_k},
                    {"sign_at_infinity", e.sign_at_infinity}}},
                  {"dims",
                   {{"h1", d.h1},
                    {"h1_mid", d.h1_mid},
                    {"h1_tilde", d.h1_tilde},
                    {"h1_mid_tilde", d.h1_mid_tilde}}},
                  {"irregularity",
                   {{"irr", ir.irr},
                    {"irr_tilde", ir.irr_tilde},
                    {"swan_at_2", ir.swan_at_2},
                    {"rigidity", ir.rigidity},
                    {"rigidity_tilde", ir.rigidity_tilde}}}};
  json locs = json::object();
  for (const auto& [p, s] : e.local_signs) locs[std::to_string(p)] = s;
  payload["sign"]["local_signs"] = locs;

  json hodge = json::object();
  for (HodgeVariant v : {HodgeVariant::H1, HodgeVariant::H1_mid, HodgeVariant::H1_tilde,
                         HodgeVariant::H1_mid_tilde}) {
    HodgeData h = hodge_numbers(k, v);
    json entries = json::array();
    for (const auto& [key, mult] : h.entries) {
      const auto& [pp, qq, ww] = key;
      entries.push_back({{"p", pp}, {"q", qq}, {"weight", ww}, {"mult", mult}});
    }
    hodge[variant_name(v)] = entries;
  }
  payload["hodge_numbers"] = hodge;
  json verts = json::array();
  for (const auto& [x, y] : poly.vertices) verts.push_back({x, y});
  payload["hodge_polygon"] = verts;

  if (fmt == Fmt::human) {
    std::printf("k = %d  (motivic weight %d)\n\n", k, k + 1);
    std::printf("%-16s %s  (odd part %s, 2-exponent %d)%s\n", "conductor",
                c.value.get_str().c_str(), c.odd_part.get_str().c_str(), c.two_exponent,
                c.conjectural ? "  [2-part conjectural]" : "");
    std::printf("%-16s m = %d, shifts%s\n", "gamma factor", g.m, shifts_str.c_str());
    std::printf("%-16s %+d%s\n", "sign", e.sign,
                e.conjectural ? "  [conjectural]" : "");
    if (k % 2 == 0)
      std::printf("%-16s t_k = %ld, sign at infinity %+d\n", "", e.t_k,
                  e.sign_at_infinity);
    std::printf("%-16s h1 = %ld, h1_mid = %ld, h1_tilde = %ld, h1_mid_tilde = %ld\n",
                "dimensions", d.h1, d.h1_mid, d.h1_tilde, d.h1_mid_tilde);
    for (HodgeVariant v : {HodgeVariant::H1, HodgeVariant::H1_mid}) {
      HodgeData h = hodge_numbers(k, v);
      std::printf("%-16s", variant_name(v));
      for (const auto& [key, mult] : h.entries) {
        const auto& [pp, qq, ww] = key;
        (void)mult;
        std::printf(" h^{%d,%d}(w=%ld)", pp, qq, ww);
      }
      std::printf("\n");
    }
    std::printf("%-16s %s\n", "hodge polygon", vertices_str.c_str());
    std::printf("%-16s irr = %ld, swan_2 = %ld, rigidity = %ld\n", "irregularity",
                ir.irr, ir.swan_at_2, ir.rigidity);
  }
  if (fmt == Fmt::csv) {
    std::printf("key,value\n");
    std::printf("k,%d\n", k);
    std::printf("conductor,%s\n", c.value.get_str().c_str());
    std::printf("conductor_odd_part,%s\n", c.odd_part.get_str().c_str());
    std::printf("conductor_two_exponent,%d\n", c.two_exponent);
    std::printf("conductor_conjectural,%d\n", c.conjectural ? 1 : 0);
    std::printf("gamma_m,%d\n", g.m);
    std::printf("sign,%d\n", e.sign);
    std::printf("sign_conjectural,%d\n", e.conjectural ? 1 : 0);
    std::printf("h1,%ld\nh1_mid,%ld\nh1_tilde,%ld\nh1_mid_tilde,%ld\n", d.h1, d.h1_mid,
                d.h1_tilde, d.h1_mid_tilde);
    std::printf("polygon,\"%s\"\n", vertices_str.c_str());
  }
  return finish(fmt, payload, {});
}

int cmd_derham(int k, int degree_bound, Fmt fmt) {
  CohomologyBases ch = degree_bound > 0 ? cohomology(k, degree_bound) : cohomology(k);
  FiltrationJumps fj = filtration_jumps(k);

  json payload = {{"k", k}, {"h0_dim", ch.h0.size()}, {"h1_dim", ch.h1.size()}};
  json basis = json::array();
  for (const GradedElement& x : ch.h1) basis.push_back(graded_json(x));
  payload["h1_basis"] = basis;
  payload["filtration_jumps"] = {
      {"computed", fj.computed}, {"full", fj.full}, {"partial", fj.partial}};
  if (k % 2 == 0) {
    GradedElement sigma = graded_kernel_generator(k);
    payload["kernel_generator"] = graded_json(sigma);
    payload["euler_image_nonzero"] = euler_image_nonzero_in_graded_cokernel(k, 0);
  }

  if (fmt == Fmt::human) {
    std::printf("k = %d\n\n", k);
    std::printf("dim H0 = %zu, dim H1 = %zu\n", ch.h0.size(), ch.h1.size());
    for (std::size_t i = 0; i < ch.h1.size(); ++i)
      std::printf("  h1[%zu] = %s\n", i, format_graded(ch.h1[i]).c_str());
    if (k % 2 == 0) {
      std::printf("kernel generator: %s\n",
                  format_graded(graded_kernel_generator(k)).c_str());
      std::printf("euler image nonzero in graded cokernel (r=0): %s\n",
                  euler_image_nonzero_in_graded_cokernel(k, 0) ? "yes" : "no");
    }
    std::ostringstream jc, jf;
    for (int j : fj.computed) jc << j << " ";
    for (int j : fj.full) jf << j << " ";
    std::printf("filtration jumps: %s%s\n", jc.str().c_str(),
                fj.partial ? " (computed slice p > k/2)" : "");
    if (fj.partial) std::printf("full jump list:   %s\n", jf.str().c_str());
  }
  if (fmt == Fmt::csv) {
    std::printf("item,value\n");
    std::printf("h0_dim,%zu\nh1_dim,%zu\n", ch.h0.size(), ch.h1.size());
    for (std::size_t i = 0; i < ch.h1.size(); ++i)
      std::printf("h1_%zu,\"%s\"\n", i, format_graded(ch.h1[i]).c_str());
    std::ostringstream jf;
    for (int j : fj.full) jf << j << " ";
    std::printf("filtration_jumps,\"%s\"\n", jf.str().c_str());
  }
  return finish(fmt, payload, {});
}

LFunctionSpec spec_for(int k, std::uint64_t pmax) {
  if (k == 1 || k == 2 || k == 4) return lfunction_spec_trivial(k, pmax);
  if (k == 3) return lfunction_spec_k3(pmax);
  if (k == 6) {
    MomentTable table(6);
    return lfunction_spec_k6(pmax, table);
  }
  fail(errc::precondition, "functional equation data available for k in {1,2,3,4,6}");
}

int cmd_fe_check(int k, int points, std::uint64_t pmax, double tol,
                 const QuadratureParams& qp, Fmt fmt) {
  if (pmax == 0) pmax = (k == 3) ? 600000 : (k == 6) ? 300000 : 1000;
  LFunctionSpec spec = spec_for(k, pmax);
  double center = 0.5 * spec.reflection;

  std::vector<std::string> failures;
  json rows = json::array();
  if (fmt == Fmt::human) {
    std::ostringstream cj;
    for (const auto& name : spec.conjectural) cj << " " << name;
    std::printf("k = %d  conductor %s  sign %+d  pmax %llu%s%s\n\n", k,
                spec.conductor.get_str().c_str(), spec.sign,
                static_cast<unsigned long long>(spec.pmax),
                spec.conjectural.empty() ? "" : "  conjectural:", cj.str().c_str());
    std::printf("%10s %10s %14s\n", "Re(s)", "Im(s)", "defect");
  }
  if (fmt == Fmt::csv) std::printf("re,im,defect,passed\n");
  // The defect vanishes identically at the reflection point for any sign
  // choice, so every probe sits off center.
  for (int j = 0; j < points; ++j) {
    double re = center + 0.5 + 0.25 * (j % 3);
    double im = (j % 2 == 0 ? 1.0 : -1.0) * 0.7 * ((j + 1) / 2);
    cplx s{re, im};
    double defect = fe_defect(spec, s, qp);
    bool ok = defect < tol;
    if (!ok) {
      std::ostringstream os;
      os << "defect " << defect << " at s=(" << re << "," << im << ") exceeds " << tol;
      failures.push_back(os.str());
    }
    if (fmt == Fmt::human)
      std::printf("%10.3f %10.3f %14.3e  %s\n", re, im, defect, ok ? "ok" : "FAIL");
    if (fmt == Fmt::csv)
      std::printf("%.6f,%.6f,%.6e,%d\n", re, im, defect, ok ? 1 : 0);
    rows.push_back({{"re", re}, {"im", im}, {"defect", defect}, {"passed", ok}});
  }
  if (fmt == Fmt::human)
    std::printf("\n%s (tolerance %.1e)\n",
                failures.empty() ? "all points pass" : "FAILURES above", tol);
  json payload = {{"k", k},
                  {"conductor", spec.conductor.get_str()},
                  {"sign", spec.sign},
                  {"conjectural", spec.conjectural},
                  {"tolerance", tol},
                  {"points", rows},
                  {"all_passed", failures.empty()}};
  return finish(fmt, payload, failures);
}

int cmd_selfcheck(Fmt fmt) {
  struct Section {
    const char* name;
    std::function<std::string()> body;
  };
  std::vector<Section> sections;

  sections.push_back({"closed forms of Z_1..Z_4, p <= 50", [] {
    MomentTable t(4);
    const IntPolynomial lin{1, -1};
    for (std::uint64_t p : primes_upto(50)) {
      mpz_class psq = mpz_class(p) * p;
      if (zeta_poly(1, p, t) != lin || zeta_poly(2, p, t) != lin) return std::string("k <= 2");
      if (zeta_poly(3, p, t) != lin * IntPolynomial(std::vector<mpz_class>{1, -chi3(p) * psq}))
        return "k = 3 at p = " + std::to_string(p);
      IntPolynomial z4 = (p == 2) ? lin : lin * IntPolynomial(std::vector<mpz_class>{1, -psq});
      if (zeta_poly(4, p, t) != z4) return "k = 4 at p = " + std::to_string(p);
    }
    return std::string();
  }});
  sections.push_back({"euler certificates, k <= 6, p <= 7", [] {
    MomentTable t(6);
    for (int k = 1; k <= 6; ++k)
      for (std::uint64_t p : {2, 3, 5, 7}) {
        EulerFactorRecord r = build_euler_record(k, p, t);
        if (!r.all_passed())
          return "k = " + std::to_string(k) + ", p = " + std::to_string(p);
      }
    return std::string();
  }});
  sections.push_back({"conductor dual formulas, odd k <= 99", [] {
    for (int k = 1; k <= 99; k += 2) (void)conductor(k);
    if (conductor(5).value != 15) return std::string("conductor(5)");
    if (conductor(6).odd_part != 3) return std::string("odd part of conductor(6)");
    return std::string();
  }});
  sections.push_back({"gamma and sign recipes, k <= 24", [] {
    for (int k = 1; k <= 24; ++k) {
      (void)gamma_factor(k);
      (void)epsilon_sign(k);
    }
    if (epsilon_sign(6).sign != +1 || epsilon_sign(8).sign != +1 ||
        epsilon_sign(12).sign != -1)
      return std::string("even-k sign table");
    return std::string();
  }});
  sections.push_back({"hodge dimensions and polygons, k <= 60", [] {
    for (int k = 1; k <= 60; ++k) {
      HodgeDims d = dims(k);
      if (hodge_numbers(k, HodgeVariant::H1).dimension() != d.h1 ||
          hodge_numbers(k, HodgeVariant::H1_mid).dimension() != d.h1_mid)
        return "k = " + std::to_string(k);
      (void)hodge_polygon_compact(k);
    }
    using V = std::pair<long, long>;
    if (hodge_polygon_compact(6).vertices.back() != V{3, 7} ||
        hodge_polygon_compact(7).vertices.back() != V{4, 12} ||
        hodge_polygon_compact(8).vertices.back() != V{4, 13})
      return std::string("polygon endpoints");
    return std::string();
  }});
  sections.push_back({"newton vs hodge, k <= 6, p <= 7", [] {
    MomentTable t(6);
    for (int k = 1; k <= 6; ++k)
      for (std::uint64_t p : {2, 3, 5, 7})
        if (!newton_vs_hodge(k, p, zeta_poly(k, p, t)).passed)
          return "k = " + std::to_string(k) + ", p = " + std::to_string(p);
    return std::string();
  }});
  sections.push_back({"de rham bases and filtration jumps, k <= 8", [] {
    for (int k = 1; k <= 8; ++k) {
      CohomologyBases ch = cohomology(k);
      if (!ch.h0.empty() || static_cast<long>(ch.h1.size()) != (k + 1) / 2)
        return "k = " + std::to_string(k);
      (void)filtration_jumps(k);
      if (k % 2 == 0 && graded_kernel_generator(k).is_zero())
        return "kernel generator, k = " + std::to_string(k);
    }
    return std::string();
  }});
  sections.push_back({"functional equations, k = 1 and k = 3", [] {
    LFunctionSpec s1 = lfunction_spec_trivial(1, 100);
    if (fe_defect(s1, cplx{1.7, 0.3}) != 0.0) return std::string("k = 1 defect");
    LFunctionSpec s3 = lfunction_spec_k3(400000);
    if (fe_defect(s3, cplx{3.0, 0.0}) > 1e-6) return std::string("k = 3 defect");
    LambdaValue v = completed_lambda(s3, cplx{2.5, 0.0});
    cplx ref = lambda3_closed_form(cplx{2.5, 0.0});
    if (std::abs(v.value - ref) > 1e-8 * std::abs(ref))
      return std::string("k = 3 closed form");
    return std::string();
  }});

  std::vector<std::string> failures;
  json rows = json::array();
  for (const Section& sec : sections) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = sec.body();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = detail.empty();
    if (!ok) failures.push_back(std::string(sec.name) + ": " + detail);
    if (fmt == Fmt::human)
      std::printf("%-44s %s  (%.1fs)\n", sec.name, ok ? "ok" : "FAIL", secs);
    if (fmt == Fmt::csv)
      std::printf("\"%s\",%d,%.2f\n", sec.name, ok ? 1 : 0, secs);
    rows.push_back({{"check", sec.name}, {"passed", ok}, {"seconds", secs},
                    {"detail", detail}});
  }
  if (fmt == Fmt::human)
    std::printf("\nselfcheck: %zu/%zu sections passed\n", sections.size() - failures.size(),
                sections.size());
  json payload = {{"checks", rows}, {"all_passed", failures.empty()}};
  return finish(fmt, payload, failures);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetric-power moments of Kloosterman sums: exact Euler factors, "
               "motivic invariants, and functional equation checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kCodeVersion);

  bool flag_json = false, flag_csv = false;
  app.add_flag("--json", flag_json, "JSON on stdout");
  app.add_flag("--csv", flag_csv, "CSV on stdout");

  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  int rc = 0;

  struct {
    int k = 3;
    std::uint64_t p = 2;
    int n = 3;
    std::uint64_t pmax = 50;
    std::uint64_t budget = kDefaultFieldBudget;
    unsigned jobs = 0;
    std::string cache_dir;
    bool no_cache = false;
    int points = 5;
    double tol = 1e-6;
    int degree_bound = 0;
    QuadratureParams qp;
  } opt;
  opt.jobs = hw;

  auto fmt_of = [&]() -> Fmt {
    if (flag_json && flag_csv) fail(errc::precondition, "--json and --csv are exclusive");
    return flag_json ? Fmt::js : flag_csv ? Fmt::csv : Fmt::human;
  };

  CLI::App* c_mom = app.add_subcommand("moments", "exact moments over F_{p^i}, i <= n");
  c_mom->add_option("--k", opt.k, "symmetric power")->required()->check(CLI::Range(1, 12));
  c_mom->add_option("--p", opt.p, "prime")->required();
  c_mom->add_option("--n", opt.n, "largest extension degree")->check(CLI::Range(1, 64));
  c_mom->add_option("--budget", opt.budget, "largest field size enumerated");
  c_mom->add_option("--jobs", opt.jobs, "enumeration threads");
  c_mom->callback([&] { rc = cmd_moments(opt.k, opt.p, opt.n, opt.budget, opt.jobs, fmt_of()); });

  CLI::App* c_eul = app.add_subcommand(
      "euler", "certified factors Z, R, M for all p <= pmax (cached, parallel)");
  c_eul->add_option("--k", opt.k, "symmetric power")->required()->check(CLI::Range(1, 12));
  c_eul->add_option("--pmax", opt.pmax, "prime bound")->required();
  c_eul->add_option("--jobs", opt.jobs, "worker threads");
  c_eul->add_option("--budget", opt.budget, "largest field size enumerated");
  c_eul->add_option("--cache-dir", opt.cache_dir, "override the cache directory");
  c_eul->add_flag("--no-cache", opt.no_cache, "recompute and do not touch the cache");
  c_eul->callback([&] {
    rc = cmd_euler(opt.k, opt.pmax, opt.jobs, opt.budget, opt.cache_dir, opt.no_cache,
                   fmt_of());
  });

  CLI::App* c_inv = app.add_subcommand(
      "invariants", "conductor, gamma factor, sign, Hodge data for one k");
  c_inv->add_option("--k", opt.k, "symmetric power")->required()->check(CLI::Range(1, 200));
  c_inv->callback([&] { rc = cmd_invariants(opt.k, fmt_of()); });

  CLI::App* c_dr = app.add_subcommand(
      "derham", "cohomology basis, kernel generator, filtration jumps");
  c_dr->add_option("--k", opt.k, "symmetric power")->required()->check(CLI::Range(1, 40));
  c_dr->add_option("--degree-bound", opt.degree_bound, "truncation degree (default 2k+6)");
  c_dr->callback([&] { rc = cmd_derham(opt.k, opt.degree_bound, fmt_of()); });

  CLI::App* c_fe = app.add_subcommand("fe-check", "functional equation defect table");
  c_fe->add_option("--k", opt.k, "symmetric power (1, 2, 3, 4 or 6)")->required();
  c_fe->add_option("--points", opt.points, "number of probe points")->check(CLI::Range(1, 40));
  c_fe->add_option("--pmax", opt.pmax, "Dirichlet series prime bound (0 = default)")
      ->default_val(std::uint64_t{0});
  c_fe->add_option("--tol", opt.tol, "defect tolerance");
  c_fe->add_option("--step", opt.qp.step, "quadrature step");
  c_fe->add_option("--height", opt.qp.height, "quadrature contour half-height");
  c_fe->add_option("--floor", opt.qp.contour_floor, "minimum contour abscissa");
  c_fe->add_option("--scale", opt.qp.truncation_scale, "series truncation scale");
  c_fe->callback([&] {
    rc = cmd_fe_check(opt.k, opt.points, opt.pmax, opt.tol, opt.qp, fmt_of());
  });

  CLI::App* c_self = app.add_subcommand("selfcheck", "run the invariant suite at desk scale");
  c_self->callback([&] { rc = cmd_selfcheck(fmt_of()); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    emit_failure(errc_name(e.code()), e.what());
    return 1;
  } catch (const std::exception& e) {
    emit_failure("internal", e.what());
    return 1;
  }
  return rc;
}
