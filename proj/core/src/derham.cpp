#include "klsym/derham/derham.hpp"

#include <algorithm>
#include <sstream>

#include "klsym/arith/numtheory.hpp"
#include "klsym/error.hpp"
#include "klsym/invariants/hodge.hpp"

namespace klsym {

namespace {

// Row space with incremental insertion, over Q. Each stored row keeps the
// combination of inserted vectors that produced it, so that a dependency
// found during insertion yields an explicit kernel vector.
class Eliminator {
 public:
  explicit Eliminator(std::size_t width) : width_(width) {}

  std::size_t rank() const { return rows_.size(); }

  // Returns the residue of v after reduction; empty residue means v lies
  // in the current span.
  std::vector<mpq_class> reduce(std::vector<mpq_class> v,
                                std::vector<mpq_class>* comb = nullptr) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& row = rows_[i];
      const mpq_class& lead = v[pivots_[i]];
      if (lead == 0) continue;
      mpq_class factor = lead / row[pivots_[i]];
      for (std::size_t j = 0; j < width_; ++j) v[j] -= factor * row[j];
      if (comb)
        for (std::size_t j = 0; j < combs_[i].size(); ++j)
          (*comb)[j] -= factor * combs_[i][j];
    }
    return v;
  }

  // Inserts v; returns true when the rank grew. `tag` indexes v among the
  // inserted vectors for kernel tracking. Tracked inserts share one tag_count
  // and must all happen before any untracked insert.
  bool insert(std::vector<mpq_class> v, std::size_t tag, std::size_t tag_count,
              std::vector<mpq_class>* kernel_comb = nullptr) {
    std::vector<mpq_class> comb(tag_count, 0);
    comb[tag] = 1;
    v = reduce(std::move(v), &comb);
    std::size_t piv = pivot_of(v);
    if (piv == width_) {
      if (kernel_comb) *kernel_comb = std::move(comb);
      return false;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    combs_.push_back(std::move(comb));
    return true;
  }

  // Rank-growth test with no dependency bookkeeping.
  bool insert_untracked(std::vector<mpq_class> v) {
    v = reduce(std::move(v));
    std::size_t piv = pivot_of(v);
    if (piv == width_) return false;
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    combs_.emplace_back();
    return true;
  }

  bool contains(std::vector<mpq_class> v) const {
    v = reduce(std::move(v));
    return std::all_of(v.begin(), v.end(), [](const mpq_class& c) { return c == 0; });
  }

 private:
  std::size_t pivot_of(const std::vector<mpq_class>& v) const {
    for (std::size_t j = 0; j < width_; ++j)
      if (v[j] != 0) return j;
    return width_;
  }

  std::size_t width_;
  std::vector<std::vector<mpq_class>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<mpq_class>> combs_;
};

std::vector<std::pair<int, int>> lattice_basis(int k, int max_degree) {
  std::vector<std::pair<int, int>> basis;
  for (int a = 0; a <= k; ++a)
    for (int r = 0; 2 * r + a <= max_degree; ++r) basis.emplace_back(r, a);
  return basis;
}

std::vector<mpq_class> coordinates(const GradedElement& x,
                                   const std::map<std::pair<int, int>, std::size_t>& index) {
  std::vector<mpq_class> v(index.size(), 0);
  for (const auto& [key, c] : x.terms) {
    auto it = index.find(key);
    check(it != index.end(), errc::precondition, "term beyond the truncation");
    v[it->second] = c;
  }
  return v;
}

struct TruncatedVerdict {
  std::vector<GradedElement> kernel;
  bool candidates_independent = false;
  bool spanning = false;
};

TruncatedVerdict analyze(int k, int D) {
  auto dom = lattice_basis(k, D);
  auto cod = lattice_basis(k, D + 1);
  std::map<std::pair<int, int>, std::size_t> cod_index;
  for (std::size_t i = 0; i < cod.size(); ++i) cod_index[cod[i]] = i;

  TruncatedVerdict out;
  Eliminator span(cod.size());
  for (std::size_t j = 0; j < dom.size(); ++j) {
    GradedElement image = connection_apply(monomial(dom[j].first, dom[j].second), k);
    std::vector<mpq_class> kernel_comb;
    if (!span.insert(coordinates(image, cod_index), j, dom.size(), &kernel_comb)) {
      GradedElement flat;
      for (std::size_t i = 0; i < dom.size(); ++i)
        if (kernel_comb[i] != 0) flat.add_term(dom[i].first, dom[i].second, kernel_comb[i]);
      out.kernel.push_back(std::move(flat));
    }
  }

  out.candidates_independent = true;
  for (int j = 0; j < (k + 1) / 2; ++j)
    if (!span.insert_untracked(coordinates(monomial(j, 0), cod_index)))
      out.candidates_independent = false;

  out.spanning = true;
  for (const auto& [r, a] : lattice_basis(k, D - 2))
    if (!span.contains(coordinates(monomial(r, a), cod_index))) out.spanning = false;

  return out;
}

}  // namespace

bool GradedElement::is_zero() const {
  for (const auto& [key, c] : terms)
    if (c != 0) return false;
  return true;
}

int GradedElement::top_degree() const {
  int d = -1;
  for (const auto& [key, c] : terms)
    if (c != 0) d = std::max(d, 2 * key.first + key.second);
  return d;
}

GradedElement& GradedElement::add_term(int r, int a, const mpq_class& c) {
  check(r >= 0 && a >= 0, errc::precondition, "negative lattice index");
  auto it = terms.emplace(std::make_pair(r, a), 0).first;
  it->second += c;
  if (it->second == 0) terms.erase(it);
  return *this;
}

GradedElement monomial(int r, int a) {
  GradedElement x;
  x.add_term(r, a, 1);
  return x;
}

GradedElement connection_raising_part(const GradedElement& x, int k) {
  GradedElement out;
  for (const auto& [key, c] : x.terms) {
    auto [r, a] = key;
    check(a <= k, errc::precondition, "basis index above k");
    if (a < k) out.add_term(r, a + 1, (k - a) * c);
    if (a > 0) out.add_term(r + 1, a - 1, a * c);
  }
  return out;
}

GradedElement connection_euler_part(const GradedElement& x) {
  GradedElement out;
  for (const auto& [key, c] : x.terms)
    if (key.first > 0) out.add_term(key.first, key.second, key.first * c);
  return out;
}

GradedElement connection_apply(const GradedElement& x, int k) {
  GradedElement out = connection_raising_part(x, k);
  for (const auto& [key, c] : connection_euler_part(x).terms) out.add_term(key.first, key.second, c);
  return out;
}

CohomologyBases cohomology(int k, int degree_bound) {
  check(k >= 1, errc::precondition, "k >= 1 required");
  check(degree_bound >= 2 * k + 4, errc::precondition,
        "degree bound below the stabilization margin");

  TruncatedVerdict now = analyze(k, degree_bound);
  TruncatedVerdict before = analyze(k, degree_bound - 1);
  if (now.kernel.size() != before.kernel.size() ||
      now.candidates_independent != before.candidates_independent ||
      now.spanning != before.spanning) {
    std::ostringstream os;
    os << "cohomology verdict still changing at degree " << degree_bound << " for k = " << k;
    fail(errc::stabilization_failure, os.str());
  }
  if (!now.candidates_independent || !now.spanning)
    fail(errc::mismatch_with_theorem, "cokernel classes do not form the expected basis");

  CohomologyBases out;
  out.h0 = std::move(now.kernel);
  for (int j = 0; j < (k + 1) / 2; ++j) out.h1.push_back(monomial(j, 0));
  return out;
}

CohomologyBases cohomology(int k) { return cohomology(k, 2 * k + 6); }

GradedElement graded_kernel_generator(int k) {
  check(k >= 2 && k % 2 == 0, errc::precondition, "even k required");
  GradedElement sigma;
  for (int i = 0; i <= k / 2; ++i) {
    mpq_class c(binomial(static_cast<unsigned>(k / 2), static_cast<unsigned>(i)));
    if (i % 2 == 1) c = -c;
    sigma.add_term(i, k - 2 * i, c);
  }
  check(connection_raising_part(sigma, k).is_zero(), errc::check_failed,
        "raising part does not kill the kernel generator");
  return sigma;
}

bool euler_image_nonzero_in_graded_cokernel(int k, int r) {
  check(k >= 2 && k % 2 == 0 && r >= 0, errc::precondition, "even k and r >= 0 required");
  GradedElement zr_sigma;
  for (const auto& [key, c] : graded_kernel_generator(k).terms)
    zr_sigma.add_term(key.first + r, key.second, c);
  GradedElement target = connection_euler_part(zr_sigma);

  // Graded piece of degree d-1 maps into degree d under the raising part.
  int d = 2 * r + k;
  std::vector<std::pair<int, int>> cod;
  std::map<std::pair<int, int>, std::size_t> cod_index;
  for (int a = 0; a <= k; ++a)
    if ((d - a) % 2 == 0 && d - a >= 0) {
      cod_index[{(d - a) / 2, a}] = cod.size();
      cod.emplace_back((d - a) / 2, a);
    }

  Eliminator span(cod.size());
  for (int a = 0; a <= k; ++a) {
    if ((d - 1 - a) % 2 != 0 || d - 1 - a < 0) continue;
    GradedElement image = connection_raising_part(monomial((d - 1 - a) / 2, a), k);
    span.insert_untracked(coordinates(image, cod_index));
  }
  return !span.contains(coordinates(target, cod_index));
}

FiltrationJumps filtration_jumps(int k) {
  check(k >= 1, errc::precondition, "k >= 1 required");
  FiltrationJumps out;
  out.partial = (k % 2 == 0);

  auto filtration_dim = [&](int p) -> long {
    if (p > k + 1) return 0;
    return (k + 1 - p) / 2 + 1;
  };
  int low = (k % 2 == 1) ? 1 : k / 2 + 1;
  for (int p = low; p <= k + 1; ++p)
    if (filtration_dim(p) > filtration_dim(p + 1)) out.computed.push_back(p);

  out.full = hodge_numbers(k, HodgeVariant::H1).p_coordinates();
  std::vector<int> expected;
  for (int p : out.full)
    if (p >= low) expected.push_back(p);
  if (out.computed != expected) {
    std::ostringstream os;
    os << "filtration jumps disagree with the Hodge numbers at k = " << k;
    fail(errc::mismatch_with_theorem, os.str());
  }
  return out;
}

}  // namespace klsym
