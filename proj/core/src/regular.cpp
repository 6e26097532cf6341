#include "dualpair/regular.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace dualpair {

int ExtendedDiagram::edge_multiplicity(int i, int j) const {
  Rat cij = coroot_pairing(nodes[i], nodes[j]);
  Rat cji = coroot_pairing(nodes[j], nodes[i]);
  return static_cast<int>(to_long(cij * cji));
}

ExtendedDiagram extend(const RootSystem& rs) {
  ExtendedDiagram d;
  d.base = &rs;
  d.nodes = rs.simple_roots;
  d.nodes.push_back(rs.lowest_root);
  d.node_marks = rs.marks;
  d.node_marks.push_back(1);
  return d;
}

SemisimpleTypeInfo RootSubsystem::type_info() const {
  SemisimpleTypeInfo info;
  for (const auto& f : factors) info.factors.push_back({f.type, f.index, ""});
  info.canonicalize();
  return info;
}

std::string RootSubsystem::type_key() const { return type_info().str(); }

std::vector<QVec> RootSubsystem::all_roots() const {
  // Roots in the Z-span of the base: solve the expansion for every ambient
  // root and keep the integral ones.
  std::vector<QVec> out;
  if (simple_set.empty()) return out;
  QMatrix cols(ambient->ambient, simple_set.size());
  for (std::size_t j = 0; j < simple_set.size(); ++j)
    for (std::size_t i = 0; i < ambient->ambient; ++i) cols.at(i, j) = simple_set[j][i];
  for (const QVec& a : ambient->all_roots) {
    auto c = solve(cols, a);
    if (!c) continue;
    bool integral = true;
    for (const Rat& x : *c)
      if (!is_integer(x)) integral = false;
    if (integral) out.push_back(a);
  }
  return out;
}

QVec RootSubsystem::factor_highest_root(std::size_t factor_idx) const {
  const auto& fs = factors[factor_idx].ordered_simples;
  QMatrix cols(ambient->ambient, fs.size());
  for (std::size_t j = 0; j < fs.size(); ++j)
    for (std::size_t i = 0; i < ambient->ambient; ++i) cols.at(i, j) = fs[j][i];
  QVec best;
  Rat best_h(-1);
  for (const QVec& a : ambient->all_roots) {
    auto c = solve(cols, a);
    if (!c) continue;
    Rat h = 0;
    bool ok = true;
    for (const Rat& x : *c) {
      if (!is_integer(x) || x < 0) ok = false;
      h += x;
    }
    if (ok && h > best_h) {
      best_h = h;
      best = a;
    }
  }
  if (best_h < 0) throw std::logic_error("factor has no roots");
  return best;
}

Rat factor_index(const RootSubsystem& sub, std::size_t factor_idx) {
  // Short coroot of the factor = coroot of a long factor root; long factor
  // roots already occur among the factor's simple roots.
  const auto& fs = sub.factors[factor_idx].ordered_simples;
  Rat max_norm(0);
  for (const QVec& a : fs) max_norm = std::max(max_norm, dot(a, a));
  return Rat(2) * sub.ambient->form_scale / max_norm;
}

RootSubsystem make_subsystem(const RootSystem& ambient, std::vector<QVec> simple_set) {
  RootSubsystem sub;
  sub.ambient = &ambient;
  sub.simple_set = std::move(simple_set);
  for (std::size_t i = 0; i < sub.simple_set.size(); ++i)
    for (std::size_t j = i + 1; j < sub.simple_set.size(); ++j)
      if (dot(sub.simple_set[i], sub.simple_set[j]) > 0)
        throw std::invalid_argument("simple set is not a base (acute pair)");
  auto comps = classify_simple_roots(sub.simple_set);
  for (const auto& c : comps) {
    RootSubsystem::Factor f;
    f.type = c.type;
    for (int idx : c.order) f.ordered_simples.push_back(sub.simple_set[idx]);
    f.index = 0;  // filled below
    sub.factors.push_back(std::move(f));
  }
  for (std::size_t i = 0; i < sub.factors.size(); ++i)
    sub.factors[i].index = factor_index(sub, i);
  return sub;
}

RootSubsystem elementary_operation(const RootSubsystem& sub, const QVec& node) {
  // Locate the factor owning the node.
  std::size_t fi = sub.factors.size();
  for (std::size_t i = 0; i < sub.factors.size(); ++i)
    for (const QVec& s : sub.factors[i].ordered_simples)
      if (s == node) fi = i;
  if (fi == sub.factors.size())
    throw std::invalid_argument(
        "elementary_operation: node not in the subsystem base (removing the added node is the "
        "rejected identity case)");
  QVec lowest = Rat(-1) * sub.factor_highest_root(fi);
  std::vector<QVec> next;
  for (const QVec& s : sub.simple_set)
    if (!(s == node)) next.push_back(s);
  next.push_back(lowest);
  std::sort(next.begin(), next.end(), cmp_qvec{});
  return make_subsystem(*sub.ambient, std::move(next));
}

namespace {

RootSubsystem full_subsystem(const RootSystem& rs) {
  return make_subsystem(rs, rs.simple_roots);
}

}  // namespace

std::map<std::string, RootSubsystem> enumerate_max_rank_regular(const RootSystem& rs) {
  std::map<std::string, RootSubsystem> seen;
  std::deque<RootSubsystem> queue;
  RootSubsystem full = full_subsystem(rs);
  const std::string full_key = full.type_key();
  queue.push_back(full);
  std::set<std::string> visited{full_key};
  while (!queue.empty()) {
    RootSubsystem cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t fi = 0; fi < cur.factors.size(); ++fi) {
      if (cur.factors[fi].type == SimpleType('A', 1)) continue;  // op is the identity
      for (const QVec& node : cur.factors[fi].ordered_simples) {
        RootSubsystem next = elementary_operation(cur, node);
        std::string key = next.type_key();
        if (key == full_key) continue;
        if (visited.insert(key).second) {
          seen.emplace(key, next);
          queue.push_back(std::move(next));
        }
      }
    }
  }
  return seen;
}

std::map<std::string, RootSubsystem> maximal_regular_max_rank(const RootSystem& rs) {
  auto is_prime = [](long m) {
    if (m < 2) return false;
    for (long d = 2; d * d <= m; ++d)
      if (m % d == 0) return false;
    return true;
  };
  std::map<std::string, RootSubsystem> out;
  RootSubsystem full = full_subsystem(rs);
  const std::string full_key = full.type_key();
  for (int k = 0; k < rs.rank(); ++k) {
    if (!is_prime(rs.marks[k])) continue;
    RootSubsystem next = elementary_operation(full, rs.simple_roots[k]);
    std::string key = next.type_key();
    if (key == full_key) continue;
    out.emplace(key, std::move(next));
  }
  return out;
}

std::vector<Subspace> mark_grading(const LieAlgebra& L, int k) {
  const RootSystem& rs = *L.rs;
  if (k < 1 || k > rs.rank()) throw std::invalid_argument("mark_grading: bad node index");
  long m = rs.marks[k - 1];
  std::vector<std::vector<Element>> levels(m);
  for (int i = 0; i < L.rank; ++i) levels[0].push_back(L.basis_element(i));
  for (std::size_t r = 0; r < rs.all_roots.size(); ++r) {
    Rat c = rs.simple_coeffs_of_root[r][k - 1];
    long lvl = ((to_long(c) % m) + m) % m;
    levels[lvl].push_back(L.root_vector(rs.all_roots[r]));
  }
  std::vector<Subspace> out;
  for (auto& vecs : levels) out.push_back(Subspace::span_of(L, vecs));
  return out;
}

LeviDecomposition standard_levi(const RootSystem& rs, const std::vector<int>& theta) {
  LeviDecomposition out;
  std::vector<QVec> base;
  for (int i : theta) {
    if (i < 1 || i > rs.rank()) throw std::invalid_argument("standard_levi: bad index");
    base.push_back(rs.simple_roots[i - 1]);
  }
  std::sort(base.begin(), base.end(), cmp_qvec{});
  out.semisimple_part = make_subsystem(rs, std::move(base));
  out.center_rank = rs.rank() - static_cast<long>(theta.size());
  return out;
}

Subspace subsystem_span(const LieAlgebra& L, const RootSubsystem& sub) {
  std::vector<Element> vecs;
  for (const QVec& s : sub.simple_set)
    vecs.push_back(L.cartan_from_realization(L.rs->coroot(s)));
  for (const QVec& a : sub.all_roots()) vecs.push_back(L.root_vector(a));
  return Subspace::span_of(L, vecs);
}

std::vector<Element> subsystem_generators(const LieAlgebra& L, const RootSubsystem& sub) {
  std::vector<Element> gens;
  for (const QVec& s : sub.simple_set) {
    gens.push_back(L.root_vector(s));
    gens.push_back(L.root_vector(Rat(-1) * s));
  }
  return gens;
}

}  // namespace dualpair
