#include "dualpair/admissible.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dualpair {

std::vector<CircledComponent> circled_components(const std::vector<QVec>& psi,
                                                 const std::vector<int>& circled) {
  const int n = static_cast<int>(psi.size());
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dot(psi[i], psi[j]) != 0) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  std::set<int> circ(circled.begin(), circled.end());
  std::vector<CircledComponent> out;
  for (int g : circled) {
    CircledComponent comp;
    comp.circled = g;
    std::set<int> seen{g};
    std::vector<int> stack{g};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int nb : adj[x]) {
        if (circ.count(nb) && nb != g) continue;  // stop before other circles
        if (seen.insert(nb).second) stack.push_back(nb);
      }
    }
    comp.nodes.assign(seen.begin(), seen.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

// The unique H in the coroot span of the given nodes with prescribed
// values on those nodes' roots.
Element solve_h(const LieAlgebra& L, const std::vector<QVec>& psi, const std::vector<int>& nodes,
                const std::vector<Rat>& values) {
  QMatrix m(nodes.size(), nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j)
      m.at(i, j) = coroot_pairing(psi[nodes[i]], psi[nodes[j]]);
  auto c = solve(m, values);
  if (!c) throw std::logic_error("H_theta system is singular");
  QVec v(L.rs->ambient, Rat(0));
  for (std::size_t j = 0; j < nodes.size(); ++j)
    v = v + (*c)[j] * L.rs->coroot(psi[nodes[j]]);
  return L.cartan_from_realization(v);
}

}  // namespace

AdmissibleCouple make_couple(const LieAlgebra& L, const std::vector<QVec>& psi,
                             const std::vector<int>& circled) {
  AdmissibleCouple c;
  c.L = &L;
  c.psi = psi;
  c.circled = circled;
  std::sort(c.circled.begin(), c.circled.end());
  c.components = circled_components(psi, c.circled);

  std::set<int> circ(c.circled.begin(), c.circled.end());
  std::vector<int> all_nodes(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) all_nodes[i] = static_cast<int>(i);
  std::vector<Rat> values(psi.size(), Rat(0));
  for (int g : c.circled) values[g] = 2;
  c.H_theta = solve_h(L, psi, all_nodes, values);

  for (const auto& comp : c.components) {
    std::vector<Rat> vals(comp.nodes.size(), Rat(0));
    for (std::size_t i = 0; i < comp.nodes.size(); ++i)
      if (comp.nodes[i] == comp.circled) vals[i] = 2;
    c.component_H.push_back(solve_h(L, psi, comp.nodes, vals));
  }

  // h_theta: kernel of the theta values inside the coroot span of psi.
  std::vector<Element> coroots;
  for (const QVec& a : psi) coroots.push_back(L.cartan_from_realization(L.rs->coroot(a)));
  Subspace coroot_span = Subspace::span_of(L, coroots);
  QMatrix constraints(psi.size(), coroot_span.dim());
  std::size_t row = 0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (circ.count(static_cast<int>(i))) continue;
    for (std::size_t j = 0; j < coroot_span.dim(); ++j)
      constraints.at(row, j) = L.root_value(psi[i], coroot_span.basis_vector(j));
    ++row;
  }
  constraints.rows = row;
  constraints.a.resize(row * coroot_span.dim());
  QMatrix k = kernel(constraints);
  QMatrix rows;
  rows.cols = L.dim;
  for (std::size_t r = 0; r < k.rows; ++r) {
    Element v = L.zero();
    for (std::size_t j = 0; j < coroot_span.dim(); ++j)
      if (k.at(r, j) != 0) {
        Element bj = coroot_span.basis_vector(j);
        for (std::size_t q = 0; q < L.dim; ++q) v[q] += k.at(r, j) * bj[q];
      }
    rows.append_row(v);
  }
  c.h_theta = Subspace(L, std::move(rows));
  return c;
}

AdmissibleVerdict is_admissible(const AdmissibleCouple& c, std::uint64_t seed) {
  const LieAlgebra& L = *c.L;
  AdmissibleVerdict v;
  for (std::size_t ci = 0; ci < c.components.size(); ++ci) {
    const auto& comp = c.components[ci];
    std::vector<QVec> base;
    for (int i : comp.nodes) base.push_back(c.psi[i]);
    std::sort(base.begin(), base.end(), cmp_qvec{});
    RootSubsystem sub = make_subsystem(*L.rs, base);
    Subspace domain = subsystem_span(L, sub);
    auto t = build_sl2_in(L, c.component_H[ci], domain, mix_key(seed, 7000 + ci));
    if (!t) {
      v.admissible = false;
      v.failed_component = static_cast<int>(ci);
      return v;
    }
    v.component_triples.push_back(*t);
  }
  v.admissible = true;
  return v;
}

std::optional<AdmissibleSubalgebra> build_admissible(const AdmissibleCouple& c,
                                                     std::uint64_t seed) {
  const LieAlgebra& L = *c.L;
  AdmissibleVerdict v = is_admissible(c, seed);
  if (!v.admissible) return std::nullopt;
  AdmissibleSubalgebra out;
  out.couple = c;
  out.triples = v.component_triples;
  std::vector<Element> gens;
  for (const auto& t : out.triples) {
    gens.push_back(t.X);
    gens.push_back(t.H);
    gens.push_back(t.Y);
  }
  SubalgebraHandle h;
  h.L = &L;
  h.generators = gens;
  h.span = span_closure(L, gens);
  bool relative = c.psi.size() != L.rs->simple_roots.size() ||
                  !std::equal(c.psi.begin(), c.psi.end(), L.rs->simple_roots.begin());
  h.recipe = relative ? Recipe::AdmissibleInRegular : Recipe::Admissible;

  // The generated subalgebra's Cartan is h_theta.
  Subspace cartan_part = intersect(h.span, [&] {
    std::vector<Element> hb;
    for (int i = 0; i < L.rank; ++i) hb.push_back(L.basis_element(i));
    return Subspace::span_of(L, hb);
  }());
  if (!(cartan_part == c.h_theta))
    throw std::logic_error("generated subalgebra's Cartan differs from h_theta");

  std::string why;
  auto idn = identify(L, h.span, &why, seed);
  if (!idn) throw std::logic_error("admissible subalgebra identification failed: " + why);
  out.identified = idn->type;
  h.identified = idn->type;
  h.cartan = idn->cartan;
  out.handle = std::move(h);
  return out;
}

}  // namespace dualpair
