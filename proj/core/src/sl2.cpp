#include "dualpair/sl2.hpp"

#include <algorithm>
#include <stdexcept>

namespace dualpair {

bool verify_sl2(const LieAlgebra& L, const Sl2Triple& t) {
  return bracket(L, t.H, t.X) == Rat(2) * t.X && bracket(L, t.H, t.Y) == Rat(-2) * t.Y &&
         bracket(L, t.X, t.Y) == t.H && !is_zero(t.X);
}

DefiningVector defining_vector_from_realization(const LieAlgebra& L, const QVec& v) {
  DefiningVector dv;
  dv.bourbaki = v;
  dv.H = L.cartan_from_realization(v);
  const RootSystem& rs = *L.rs;
  // Dynkin's chart: coefficient of beta^vee for long simple beta, of
  // gamma^vee / r for short simple gamma.
  Rat max_norm(0);
  for (const auto& a : rs.all_roots)
    if (dot(a, a) > max_norm) max_norm = dot(a, a);
  QMatrix cols(rs.ambient, rs.rank());
  for (int j = 0; j < rs.rank(); ++j) {
    QVec col = rs.simple_coroots[j];
    if (dot(rs.simple_roots[j], rs.simple_roots[j]) != max_norm)
      col = Rat(1, rs.length_ratio) * col;
    for (std::size_t i = 0; i < rs.ambient; ++i) cols.at(i, j) = col[i];
  }
  auto c = solve(cols, v);
  if (!c) throw std::invalid_argument("defining vector outside the coroot span");
  dv.dynkin_coords = *c;
  return dv;
}

DefiningVector defining_vector_from_dynkin_coords(const LieAlgebra& L, const QVec& coords) {
  const RootSystem& rs = *L.rs;
  Rat max_norm(0);
  for (const auto& a : rs.all_roots)
    if (dot(a, a) > max_norm) max_norm = dot(a, a);
  QVec v(rs.ambient, Rat(0));
  for (int j = 0; j < rs.rank(); ++j) {
    QVec col = rs.simple_coroots[j];
    if (dot(rs.simple_roots[j], rs.simple_roots[j]) != max_norm)
      col = Rat(1, rs.length_ratio) * col;
    v = v + coords[j] * col;
  }
  return defining_vector_from_realization(L, v);
}

WeightedDiagram weighted_diagram(const LieAlgebra& L, const DefiningVector& dv) {
  const RootSystem& rs = *L.rs;
  for (const QVec& a : rs.all_roots)
    if (!is_integer(dot(a, dv.bourbaki)))
      throw std::invalid_argument("weighted_diagram: non-integral root value");
  auto [dom, word] = make_dominant(rs, dv.bourbaki);
  WeightedDiagram wd;
  wd.dominant_h = dom;
  for (int i = 0; i < rs.rank(); ++i) wd.labels.push_back(to_long(dot(rs.simple_roots[i], dom)));
  return wd;
}

Rat sl2_index(const LieAlgebra& L, const DefiningVector& dv) {
  return normalized_form(*L.rs, dv.bourbaki, dv.bourbaki) / 2;
}

namespace {

std::uint64_t hash_qvec(const QVec& v) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const Rat& x : v) {
    h = (h ^ static_cast<std::uint64_t>(mpz_get_si(x.get_num().get_mpz_t()))) *
        0x100000001b3ull;
    h = (h ^ static_cast<std::uint64_t>(mpz_get_si(x.get_den().get_mpz_t()))) *
        0x100000001b3ull;
  }
  return h;
}

std::optional<Sl2Triple> search(const LieAlgebra& L, const Element& H, const Subspace& up,
                                const Subspace& down, std::uint64_t seed) {
  if (up.dim() == 0 || down.dim() == 0) return std::nullopt;
  Rng rng(seed);
  for (int attempt = 0; attempt < kSl2Retries; ++attempt) {
    Element X = L.zero();
    for (std::size_t i = 0; i < up.dim(); ++i) {
      Element b = up.basis_vector(i);
      Rat c(attempt == 0 ? 1 : rng.small_nonzero(3));
      for (std::size_t k = 0; k < L.dim; ++k)
        if (b[k] != 0) X[k] += c * b[k];
    }
    auto sol = solve_affine_in_subspace(
        L, [&](const Element& y) { return bracket(L, X, y); }, H, down);
    if (sol) {
      Sl2Triple t{X, H, sol->particular};
      if (verify_sl2(L, t)) return t;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Sl2Triple> build_sl2(const LieAlgebra& L, const Element& H, std::uint64_t seed) {
  for (const QVec& a : L.rs->all_roots)
    if (!is_integer(L.root_value(a, H))) return std::nullopt;
  Subspace up = cartan_eigenspace(L, H, Rat(2));
  Subspace down = cartan_eigenspace(L, H, Rat(-2));
  return search(L, H, up, down, mix_key(seed, hash_qvec(H)));
}

std::optional<Sl2Triple> build_sl2_in(const LieAlgebra& L, const Element& H,
                                      const Subspace& domain, std::uint64_t seed) {
  for (const QVec& a : L.rs->all_roots)
    if (!is_integer(L.root_value(a, H))) return std::nullopt;
  Subspace up = intersect(cartan_eigenspace(L, H, Rat(2)), domain);
  Subspace down = intersect(cartan_eigenspace(L, H, Rat(-2)), domain);
  return search(L, H, up, down, mix_key(seed, hash_qvec(H) ^ domain.dim()));
}

std::vector<Sl2Class> enumerate_sl2_classes(const LieAlgebra& L, std::uint64_t seed) {
  const RootSystem& rs = *L.rs;
  const int n = rs.rank();
  if (n > 8) throw std::invalid_argument("enumerate_sl2_classes: rank > 8");
  std::vector<Sl2Class> out;
  std::vector<int> labels(n, 0);
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long code = 1; code < total; ++code) {
    long c = code;
    for (int i = 0; i < n; ++i) {
      labels[i] = static_cast<int>(c % 3);
      c /= 3;
    }
    QVec v(rs.ambient, Rat(0));
    for (int i = 0; i < n; ++i)
      if (labels[i]) v = v + Rat(labels[i]) * rs.fundamental_coweights[i];
    DefiningVector dv = defining_vector_from_realization(L, v);
    auto t = build_sl2(L, dv.H, seed);
    if (!t) continue;
    Sl2Class cls;
    cls.diagram.dominant_h = v;
    for (int i = 0; i < n; ++i) cls.diagram.labels.push_back(labels[i]);
    cls.defining_vector = dv;
    cls.index = sl2_index(L, dv);
    cls.triple = *t;
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const Sl2Class& a, const Sl2Class& b) {
    if (a.index != b.index) return a.index < b.index;
    return cmp_qvec{}(a.defining_vector.bourbaki, b.defining_vector.bourbaki);
  });
  return out;
}

}  // namespace dualpair
