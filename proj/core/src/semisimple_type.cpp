#include "dualpair/semisimple_type.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dualpair {

std::string SimpleFactor::str() const {
  if (!is_integer(index)) throw std::logic_error("non-integral Dynkin index");
  return type.str() + "^" + std::to_string(to_long(index)) + prime;
}

long SemisimpleTypeInfo::total_dim() const {
  long d = 0;
  for (const auto& f : factors) d += f.type.algebra_dim();
  return d;
}

long SemisimpleTypeInfo::total_rank() const {
  long r = 0;
  for (const auto& f : factors) r += f.type.rank;
  return r;
}

void SemisimpleTypeInfo::canonicalize() {
  for (auto& f : factors) f.type = canonical_low_rank(f.type);
  std::sort(factors.begin(), factors.end(), [](const SimpleFactor& a, const SimpleFactor& b) {
    if (a.type != b.type) return a.type < b.type;
    if (a.index != b.index) return a.index < b.index;
    return a.prime < b.prime;
  });
}

std::string SemisimpleTypeInfo::str() const {
  if (factors.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << "+";
    os << factors[i].str();
  }
  return os.str();
}

std::string SemisimpleTypeInfo::key_no_primes() const {
  SemisimpleTypeInfo copy = *this;
  for (auto& f : copy.factors) f.prime.clear();
  copy.canonicalize();
  return copy.str();
}

SemisimpleTypeInfo SemisimpleTypeInfo::parse(const std::string& s) {
  SemisimpleTypeInfo out;
  if (s == "0" || s.empty()) return out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, '+')) {
    std::size_t i = 0;
    long mult = 0;
    while (i < part.size() && isdigit(part[i])) mult = mult * 10 + (part[i++] - '0');
    if (mult == 0) mult = 1;
    if (i >= part.size()) throw std::invalid_argument("bad type factor: " + part);
    char fam = part[i++];
    long rank = 0;
    while (i < part.size() && isdigit(part[i])) rank = rank * 10 + (part[i++] - '0');
    SimpleFactor f;
    f.type = SimpleType(fam, static_cast<int>(rank));
    if (i < part.size() && part[i] == '^') {
      ++i;
      long idx = 0;
      while (i < part.size() && isdigit(part[i])) idx = idx * 10 + (part[i++] - '0');
      f.index = idx;
    }
    while (i < part.size() && part[i] == '\'') {
      f.prime += "'";
      ++i;
    }
    if (i != part.size()) throw std::invalid_argument("bad type factor: " + part);
    for (long m = 0; m < mult; ++m) out.factors.push_back(f);
  }
  out.canonicalize();
  return out;
}

SimpleType canonical_low_rank(SimpleType t) {
  if (t.rank == 1) return SimpleType('A', 1);
  if (t.family == 'C' && t.rank == 2) return SimpleType('B', 2);
  if (t.family == 'D' && t.rank == 3) return SimpleType('A', 3);
  return t;
}

namespace {

struct Graph {
  int n;
  QMatrix c;  // Cartan integers
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<int>> mult;
  std::vector<Rat> rel_len;  // relative squared lengths, per component scale

  explicit Graph(const QMatrix& cartan) : n(static_cast<int>(cartan.rows)), c(cartan) {
    adj.resize(n);
    mult.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
      if (c.at(i, i) != 2) throw std::invalid_argument("not a base: diagonal != 2");
      for (int j = i + 1; j < n; ++j) {
        if (c.at(i, j) == 0 && c.at(j, i) == 0) continue;
        if (c.at(i, j) > 0 || c.at(j, i) > 0 || c.at(i, j) * c.at(j, i) == 0)
          throw std::invalid_argument("not a base: bad Cartan pair");
        int m = static_cast<int>(to_long(c.at(i, j) * c.at(j, i)));
        adj[i].push_back(j);
        adj[j].push_back(i);
        mult[i][j] = mult[j][i] = m;
      }
    }
    // Relative lengths by propagation: (a_i,a_i)/(a_j,a_j) = c_ij / c_ji.
    rel_len.assign(n, Rat(0));
    for (int s = 0; s < n; ++s) {
      if (rel_len[s] != 0) continue;
      rel_len[s] = 1;
      std::vector<int> stack{s};
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int nb : adj[x])
          if (rel_len[nb] == 0) {
            rel_len[nb] = rel_len[x] * c.at(nb, x) / c.at(x, nb);
            stack.push_back(nb);
          }
      }
    }
  }

  int deg(int i) const { return static_cast<int>(adj[i].size()); }
};

// Path order starting at `from`, walking away from `avoid`.
std::vector<int> walk_path(const Graph& g, int from, int avoid) {
  std::vector<int> path{from};
  int prev = avoid, cur = from;
  for (;;) {
    int next = -1;
    for (int nb : g.adj[cur])
      if (nb != prev) next = nb;
    if (next < 0) return path;
    path.push_back(next);
    prev = cur;
    cur = next;
  }
}

DiagramComponent classify_component(const Graph& g, const std::vector<int>& nodes) {
  const int n = static_cast<int>(nodes.size());
  DiagramComponent out;
  if (n == 1) {
    out.type = SimpleType('A', 1);
    out.order = nodes;
    return out;
  }
  Rat long_norm(0);
  for (int i : nodes) long_norm = std::max(long_norm, g.rel_len[i]);
  auto is_long = [&](int i) { return g.rel_len[i] == long_norm; };

  int max_mult = 1;
  for (int i : nodes)
    for (int j : g.adj[i]) max_mult = std::max(max_mult, g.mult[i][j]);

  if (max_mult == 3) {
    if (n != 2) throw std::invalid_argument("triple bond in a larger diagram");
    int a = nodes[0], b = nodes[1];
    out.type = SimpleType('G', 2);
    out.order = is_long(a) ? std::vector<int>{a, b} : std::vector<int>{b, a};
    return out;
  }

  if (max_mult == 2) {
    std::vector<int> ends;
    for (int i : nodes)
      if (g.deg(i) == 1) ends.push_back(i);
    if (ends.size() != 2) throw std::invalid_argument("double bond in a branched diagram");
    int shorts = 0;
    for (int i : nodes)
      if (!is_long(i)) ++shorts;
    if (n == 2) {  // B2 presentation: long node first
      int a = ends[0], b = ends[1];
      out.type = SimpleType('B', 2);
      out.order = is_long(a) ? std::vector<int>{a, b} : std::vector<int>{b, a};
      return out;
    }
    if (shorts == 2 && n == 4) {
      out.type = SimpleType('F', 4);
      int start = is_long(ends[0]) ? ends[0] : ends[1];
      out.order = walk_path(g, start, -1);
      return out;
    }
    if (shorts == 1) {
      out.type = SimpleType('B', n);
      int short_end = is_long(ends[0]) ? ends[1] : ends[0];
      if (is_long(short_end)) throw std::invalid_argument("malformed B diagram");
      auto path = walk_path(g, short_end, -1);
      std::reverse(path.begin(), path.end());
      out.order = path;
      return out;
    }
    if (shorts == n - 1) {
      out.type = SimpleType('C', n);
      int long_end = is_long(ends[0]) ? ends[0] : ends[1];
      if (!is_long(long_end)) throw std::invalid_argument("malformed C diagram");
      auto path = walk_path(g, long_end, -1);
      std::reverse(path.begin(), path.end());
      out.order = path;
      return out;
    }
    throw std::invalid_argument("unrecognized doubly-laced diagram");
  }

  // Simply laced: A, D, E.
  int branch = -1;
  for (int i : nodes) {
    if (g.deg(i) > 3) throw std::invalid_argument("node of valence > 3");
    if (g.deg(i) == 3) {
      if (branch >= 0) throw std::invalid_argument("two branch nodes");
      branch = i;
    }
  }
  if (branch < 0) {
    std::vector<int> ends;
    for (int i : nodes)
      if (g.deg(i) == 1) ends.push_back(i);
    int start = std::min(ends[0], ends[1]);
    out.type = SimpleType('A', n);
    out.order = walk_path(g, start, -1);
    return out;
  }
  std::vector<std::vector<int>> arms;
  for (int nb : g.adj[branch]) arms.push_back(walk_path(g, nb, branch));
  std::sort(arms.begin(), arms.end(), [&](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.back() < y.back();
  });
  std::size_t a = arms[0].size(), b = arms[1].size(), c = arms[2].size();
  if (a == 1 && b == 1) {
    out.type = SimpleType('D', n);
    std::vector<int> order(arms[2].rbegin(), arms[2].rend());
    order.push_back(branch);
    int l1 = std::min(arms[0][0], arms[1][0]);
    int l2 = std::max(arms[0][0], arms[1][0]);
    order.push_back(l1);
    order.push_back(l2);
    out.order = order;
    return out;
  }
  if (a == 1 && b == 2 && (c >= 2 && c <= 4)) {
    out.type = SimpleType('E', n);
    std::vector<int> order;
    order.push_back(arms[1][1]);  // alpha_1
    order.push_back(arms[0][0]);  // alpha_2
    order.push_back(arms[1][0]);  // alpha_3
    order.push_back(branch);      // alpha_4
    for (int x : arms[2]) order.push_back(x);
    out.order = order;
    return out;
  }
  throw std::invalid_argument("unrecognized simply-laced diagram");
}

}  // namespace

std::vector<DiagramComponent> classify_from_cartan(const QMatrix& cartan) {
  Graph g(cartan);
  int n = g.n;
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = nc;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int nb : g.adj[x])
        if (comp[nb] < 0) {
          comp[nb] = nc;
          stack.push_back(nb);
        }
    }
    ++nc;
  }
  std::vector<std::vector<int>> groups(nc);
  for (int i = 0; i < n; ++i) groups[comp[i]].push_back(i);
  std::vector<DiagramComponent> out;
  for (const auto& grp : groups) out.push_back(classify_component(g, grp));
  std::sort(out.begin(), out.end(), [](const DiagramComponent& x, const DiagramComponent& y) {
    return *std::min_element(x.order.begin(), x.order.end()) <
           *std::min_element(y.order.begin(), y.order.end());
  });
  return out;
}

std::vector<DiagramComponent> classify_simple_roots(const std::vector<QVec>& simples) {
  const int n = static_cast<int>(simples.size());
  QMatrix c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c.at(i, j) = i == j ? Rat(2) : coroot_pairing(simples[i], simples[j]);
  return classify_from_cartan(c);
}

}  // namespace dualpair
