#include "dualpair/chevalley.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>

namespace dualpair {

namespace {

// Structure-constant builder. Signs are pinned by setting N = +(p+1) on the
// extraspecial pair of every positive non-simple root and deriving the rest
// through the Jacobi identity and the cyclic relation
//   a+b+c = 0  =>  N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b).
class ConstantTable {
 public:
  explicit ConstantTable(const RootSystem& rs) : rs_(rs) {
    for (const QVec& a : rs_.positive_roots) {
      Rat h = 0;
      for (const Rat& c : rs_.simple_coeffs_of_root[rs_.index_of(a)]) h += c;
      height_[rs_.index_of(a)] = h;
    }
  }

  // N_{a,b} for roots with a+b a root.
  Rat N(const QVec& a, const QVec& b) {
    auto key = std::make_pair(rs_.index_of(a), rs_.index_of(b));
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Rat v = compute(a, b);
    memo_[key] = v;
    return v;
  }

  // p = max{k : b - k a is a root}.
  long chain_down(const QVec& a, const QVec& b) const {
    long p = 0;
    QVec cur = b - a;
    while (rs_.is_root(cur)) {
      ++p;
      cur = cur - a;
    }
    return p;
  }

 private:
  bool positive(const QVec& a) const {
    const QVec& c = rs_.simple_coeffs_of_root[rs_.index_of(a)];
    for (const Rat& x : c)
      if (x < 0) return false;
    return true;
  }

  Rat height(const QVec& a) const { return height_.at(rs_.index_of(a)); }

  // Height, then coordinate-lex. Total on positive roots.
  bool before(const QVec& a, const QVec& b) const {
    Rat ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return cmp_qvec{}(a, b);
  }

  // Extraspecial pair of a positive non-simple root g: the minimal positive
  // root d with g-d positive; minimality makes d simple.
  std::pair<QVec, QVec> extraspecial(const QVec& g) const {
    const QVec* best = nullptr;
    for (const QVec& s : rs_.simple_roots) {
      QVec rest = g - s;
      if (rs_.is_root(rest) && positive(rest)) {
        if (!best || cmp_qvec{}(s, *best)) best = &s;
      }
    }
    if (!best) throw std::logic_error("no extraspecial pair");
    return {*best, g - *best};
  }

  Rat compute(const QVec& a, const QVec& b) {
    bool pa = positive(a), pb = positive(b);
    if (pa && pb) return pos_pair(a, b);
    if (!pa && !pb) return -N(Rat(-1) * a, Rat(-1) * b);
    if (!pa) return -N(b, a);
    // a positive, b negative, s = a+b a root.
    QVec s = a + b;
    if (positive(s)) {
      // (s, -b) is a positive pair summing to a.
      return dot(s, s) / dot(a, a) * N(s, Rat(-1) * b);
    }
    // (-s, a) is a positive pair summing to -b.
    return dot(s, s) / dot(b, b) * N(Rat(-1) * s, a);
  }

  Rat pos_pair(const QVec& a, const QVec& b) {
    if (!before(a, b)) return -N(b, a);
    QVec g = a + b;
    auto [a1, b1] = extraspecial(g);
    if (a1 == a) return Rat(chain_down(a, b) + 1);
    // Jacobi on (e_{a1}, e_{b1}, e_{-a}) expresses N_{a,b} through
    // constants whose defining sums have smaller height.
    Rat acc(0);
    QVec d = a - a1;
    if (rs_.is_root(d)) acc += N(a1, Rat(-1) * a) * N(Rat(-1) * d, b1);
    QVec r = b1 - a;
    if (rs_.is_root(r)) acc += N(b1, Rat(-1) * a) * N(a1, r);
    return -dot(g, g) / (dot(b, b) * N(a1, b1)) * acc;
  }

  const RootSystem& rs_;
  std::map<std::size_t, Rat> height_;
  std::map<std::pair<std::size_t, std::size_t>, Rat> memo_;
};

LieAlgebra build_impl(const RootSystem& rs) {
  LieAlgebra L;
  L.rs = &rs;
  L.rank = rs.rank();
  L.dim = rs.rank() + rs.all_roots.size();
  L.table.assign(L.dim * L.dim, {});

  auto set_entry = [&](std::size_t i, std::size_t j,
                       std::vector<std::pair<std::size_t, Rat>> val) {
    L.table[i * L.dim + j] = val;
    for (auto& [k, c] : val) c = -c;
    L.table[j * L.dim + i] = std::move(val);
  };

  const std::size_t n = rs.rank();

  // Coroot of every root expanded over the simple coroots.
  QMatrix coroot_cols(rs.ambient, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < rs.ambient; ++i) coroot_cols.at(i, j) = rs.simple_coroots[j][i];
  std::vector<QVec> coroot_coeffs(rs.all_roots.size());
  for (std::size_t r = 0; r < rs.all_roots.size(); ++r) {
    auto c = solve(coroot_cols, rs.coroot(rs.all_roots[r]));
    if (!c) throw std::logic_error("coroot outside coroot span");
    coroot_coeffs[r] = *c;
  }

  // [h_i, e_a] = a(h_i) e_a.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < rs.all_roots.size(); ++r) {
      Rat v = dot(rs.all_roots[r], rs.simple_coroots[i]);
      if (v != 0) set_entry(i, n + r, {{n + r, v}});
    }

  ConstantTable nt(rs);
  for (std::size_t r = 0; r < rs.all_roots.size(); ++r) {
    const QVec& a = rs.all_roots[r];
    for (std::size_t s = r + 1; s < rs.all_roots.size(); ++s) {
      const QVec& b = rs.all_roots[s];
      QVec sum = a + b;
      if (is_zero(sum)) {
        // [e_a, e_{-a}] = h_a.
        std::vector<std::pair<std::size_t, Rat>> h;
        for (std::size_t i = 0; i < n; ++i)
          if (coroot_coeffs[r][i] != 0) h.emplace_back(i, coroot_coeffs[r][i]);
        set_entry(n + r, n + s, std::move(h));
      } else if (rs.is_root(sum)) {
        Rat c = nt.N(a, b);
        long p = nt.chain_down(a, b);
        if (abs(c) != p + 1) throw std::logic_error("structure constant magnitude violation");
        set_entry(n + r, n + s, {{n + rs.index_of(sum), c}});
      }
    }
  }
  return L;
}

}  // namespace

Element LieAlgebra::basis_element(std::size_t i) const {
  Element e = zero();
  e[i] = 1;
  return e;
}

Element LieAlgebra::root_vector(const QVec& root) const {
  return basis_element(root_basis_index(rs->index_of(root)));
}

Element LieAlgebra::cartan_element(const QVec& coroot_coeffs) const {
  Element e = zero();
  for (int i = 0; i < rank; ++i) e[i] = coroot_coeffs[i];
  return e;
}

QVec LieAlgebra::realize_cartan(const Element& x) const {
  QVec v(rs->ambient, Rat(0));
  for (int i = 0; i < rank; ++i)
    if (x[i] != 0) v = v + x[i] * rs->simple_coroots[i];
  return v;
}

Element LieAlgebra::cartan_from_realization(const QVec& v) const {
  QMatrix cols(rs->ambient, rank);
  for (int j = 0; j < rank; ++j)
    for (std::size_t i = 0; i < rs->ambient; ++i) cols.at(i, j) = rs->simple_coroots[j][i];
  auto c = solve(cols, v);
  if (!c) throw std::invalid_argument("vector outside the coroot span");
  Element e = zero();
  for (int i = 0; i < rank; ++i) e[i] = (*c)[i];
  return e;
}

Rat LieAlgebra::root_value(const QVec& root, const Element& h) const {
  Rat v = 0;
  for (int i = 0; i < rank; ++i)
    if (h[i] != 0) v += h[i] * dot(root, rs->simple_coroots[i]);
  return v;
}

Rat LieAlgebra::form(const Element& x, const Element& y) const {
  // Cartan block: the normalized form of the realizations. Root block:
  // (e_a, e_{-a}) = 2/(a,a)_{g*}, all other pairs orthogonal.
  Rat v = normalized_form(*rs, realize_cartan(x), realize_cartan(y));
  for (std::size_t r = 0; r < rs->all_roots.size(); ++r) {
    const Rat& xc = x[rank + r];
    if (xc == 0) continue;
    std::size_t nr = rs->index_of(Rat(-1) * rs->all_roots[r]);
    const Rat& yc = y[rank + nr];
    if (yc == 0) continue;
    Rat dual_norm = dot(rs->all_roots[r], rs->all_roots[r]) / rs->form_scale;
    v += xc * yc * Rat(2) / dual_norm;
  }
  return v;
}

const LieAlgebra& build_chevalley(const RootSystem& rs) {
  static std::map<std::pair<char, int>, LieAlgebra> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(rs.simple_type.family, rs.simple_type.rank);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_impl(rs)).first;
  return it->second;
}

Element bracket(const LieAlgebra& L, const Element& x, const Element& y) {
  if (x.size() != L.dim || y.size() != L.dim)
    throw std::invalid_argument("bracket: element over a different algebra");
  Element out = L.zero();
  for (std::size_t i = 0; i < L.dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < L.dim; ++j) {
      if (y[j] == 0) continue;
      for (const auto& [k, c] : L.basis_bracket(i, j)) out[k] += x[i] * y[j] * c;
    }
  }
  return out;
}

QMatrix ad_matrix(const LieAlgebra& L, const Element& x) {
  QMatrix m(L.dim, L.dim);
  for (std::size_t i = 0; i < L.dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < L.dim; ++j)
      for (const auto& [k, c] : L.basis_bracket(i, j)) m.at(k, j) += x[i] * c;
  }
  return m;
}

void dump_structure_constants(const LieAlgebra& L, std::ostream& os) {
  const RootSystem& rs = *L.rs;
  for (std::size_t r = 0; r < rs.all_roots.size(); ++r)
    for (std::size_t s = 0; s < rs.all_roots.size(); ++s) {
      if (r == s) continue;
      QVec sum = rs.all_roots[r] + rs.all_roots[s];
      if (!rs.is_root(sum)) continue;
      const auto& entries = L.basis_bracket(L.rank + r, L.rank + s);
      os << "N " << vec_str(rs.all_roots[r]) << " " << vec_str(rs.all_roots[s]) << " "
         << rat_str(entries[0].second) << "\n";
    }
}

}  // namespace dualpair
