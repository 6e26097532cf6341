#include "dualpair/subspace.hpp"

#include <map>
#include <stdexcept>

namespace dualpair {

Subspace Subspace::span_of(const LieAlgebra& L, const std::vector<Element>& vecs) {
  QMatrix m;
  m.cols = L.dim;
  for (const Element& v : vecs) m.append_row(v);
  return Subspace(L, std::move(m));
}

std::vector<Element> Subspace::basis_vectors() const {
  std::vector<Element> v;
  v.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) v.push_back(basis.row(i));
  return v;
}

namespace {

// Reduce v against an RREF matrix; returns the remainder.
Element reduce_against(const QMatrix& rr, Element v) {
  // Pivot columns: first nonzero of each row.
  std::size_t row = 0;
  for (std::size_t c = 0; c < rr.cols && row < rr.rows; ++c) {
    if (rr.at(row, c) == 0) continue;
    if (v[c] != 0) {
      Rat f = v[c];
      for (std::size_t j = c; j < rr.cols; ++j)
        if (rr.at(row, j) != 0) v[j] -= f * rr.at(row, j);
    }
    ++row;
  }
  return v;
}

}  // namespace

bool Subspace::contains(const Element& v) const {
  return is_zero(reduce_against(basis, v));
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis.row(i))) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  QMatrix m = a.basis;
  for (std::size_t i = 0; i < b.basis.rows; ++i) m.append_row(b.basis.row(i));
  return Subspace(*a.algebra, std::move(m));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  // Zassenhaus: rref of [A|A; B|0]; rows with zero left half carry the
  // intersection in the right half.
  std::size_t n = a.basis.cols;
  QMatrix z(a.basis.rows + b.basis.rows, 2 * n);
  for (std::size_t i = 0; i < a.basis.rows; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      z.at(i, j) = a.basis.at(i, j);
      z.at(i, n + j) = a.basis.at(i, j);
    }
  for (std::size_t i = 0; i < b.basis.rows; ++i)
    for (std::size_t j = 0; j < n; ++j) z.at(a.basis.rows + i, j) = b.basis.at(i, j);
  rref(z);
  QMatrix out;
  out.cols = n;
  for (std::size_t i = 0; i < z.rows; ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j)
      if (z.at(i, j) != 0) left_zero = false;
    if (left_zero) out.append_row(QVec(z.a.begin() + i * 2 * n + n, z.a.begin() + (i + 1) * 2 * n));
  }
  return Subspace(*a.algebra, std::move(out));
}

Subspace span_closure(const LieAlgebra& L, const std::vector<Element>& generators) {
  Subspace s = Subspace::span_of(L, generators);
  // Alternate bracket and span rounds until a fixpoint; new rows are
  // bracketed against the whole current basis.
  std::size_t processed = 0;
  for (;;) {
    std::vector<Element> fresh;
    std::size_t d = s.dim();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = std::max(i + 1, processed); j < d; ++j) {
        Element v = bracket(L, s.basis_vector(i), s.basis_vector(j));
        if (!s.contains(v)) fresh.push_back(std::move(v));
      }
    if (fresh.empty()) return s;
    processed = 0;  // basis rows change wholesale after re-reduction
    for (auto& v : fresh) s.basis.append_row(v);
    rref(s.basis);
  }
}

bool is_bracket_closed(const LieAlgebra& L, const Subspace& s) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (!s.contains(bracket(L, s.basis_vector(i), s.basis_vector(j)))) return false;
  return true;
}

Subspace solve_in_subspace(const LieAlgebra& L, const std::function<Element(const Element&)>& f,
                           const Subspace& domain) {
  if (domain.dim() == 0) return Subspace::zero(L);
  // Columns of the constraint matrix = f on domain basis vectors.
  QMatrix m(L.dim, domain.dim());
  for (std::size_t j = 0; j < domain.dim(); ++j) {
    Element img = f(domain.basis_vector(j));
    for (std::size_t i = 0; i < L.dim; ++i) m.at(i, j) = img[i];
  }
  QMatrix k = kernel(m);
  QMatrix out;
  out.cols = L.dim;
  for (std::size_t i = 0; i < k.rows; ++i) {
    Element v = L.zero();
    for (std::size_t j = 0; j < domain.dim(); ++j)
      if (k.at(i, j) != 0) {
        Element bj = domain.basis_vector(j);
        for (std::size_t c = 0; c < L.dim; ++c) v[c] += k.at(i, j) * bj[c];
      }
    out.append_row(v);
  }
  return Subspace(L, std::move(out));
}

std::optional<AffineSolution> solve_affine_in_subspace(
    const LieAlgebra& L, const std::function<Element(const Element&)>& f, const Element& rhs,
    const Subspace& domain) {
  QMatrix m(L.dim, domain.dim());
  for (std::size_t j = 0; j < domain.dim(); ++j) {
    Element img = f(domain.basis_vector(j));
    for (std::size_t i = 0; i < L.dim; ++i) m.at(i, j) = img[i];
  }
  auto coeffs = solve(m, rhs);
  if (!coeffs) return std::nullopt;
  Element x = L.zero();
  for (std::size_t j = 0; j < domain.dim(); ++j)
    if ((*coeffs)[j] != 0) {
      Element bj = domain.basis_vector(j);
      for (std::size_t c = 0; c < L.dim; ++c) x[c] += (*coeffs)[j] * bj[c];
    }
  return AffineSolution{std::move(x), solve_in_subspace(L, f, domain)};
}

Subspace centralizer_in(const LieAlgebra& L, const Subspace& domain,
                        const std::vector<Element>& targets) {
  // Intersect incrementally; the kernel collapses after the first targets,
  // which keeps the large ambient cases cheap.
  Subspace cur = domain;
  for (const Element& t : targets) {
    if (cur.dim() == 0) break;
    cur = solve_in_subspace(L, [&](const Element& x) { return bracket(L, x, t); }, cur);
  }
  return cur;
}

std::vector<GradingLevel> grading_by(const LieAlgebra& L, const Element& H) {
  for (std::size_t i = 0; i < L.rs->all_roots.size(); ++i)
    if (H[L.rank + i] != 0) throw std::invalid_argument("grading_by: H is not in the Cartan");
  std::map<long, std::vector<Element>> levels;
  for (int i = 0; i < L.rank; ++i) levels[0].push_back(L.basis_element(i));
  for (const QVec& a : L.rs->all_roots) {
    Rat v = L.root_value(a, H);
    if (!is_integer(v) || to_long(v) % 2 != 0)
      throw std::invalid_argument("grading_by: eigenvalue " + rat_str(v) +
                                  " is not an even integer");
    levels[to_long(v) / 2].push_back(L.root_vector(a));
  }
  std::vector<GradingLevel> out;
  for (auto& [p, vecs] : levels) out.push_back({p, Subspace::span_of(L, vecs)});
  return out;
}

Subspace cartan_eigenspace(const LieAlgebra& L, const Element& H, const Rat& value) {
  std::vector<Element> vecs;
  if (value == 0)
    for (int i = 0; i < L.rank; ++i) vecs.push_back(L.basis_element(i));
  for (const QVec& a : L.rs->all_roots)
    if (L.root_value(a, H) == value) vecs.push_back(L.root_vector(a));
  return Subspace::span_of(L, vecs);
}

}  // namespace dualpair
