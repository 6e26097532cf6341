#include "dualpair/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace dualpair {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

SimpleType::SimpleType(char f, int r) : family(f), rank(r) {
  switch (f) {
    case 'A': require(r >= 1, "A_n needs n>=1"); break;
    case 'B': require(r >= 2, "B_n needs n>=2"); break;
    case 'C': require(r >= 2, "C_n needs n>=2"); break;
    case 'D': require(r >= 2, "D_n needs n>=2"); break;
    case 'E': require(r >= 6 && r <= 8, "E_n needs n in {6,7,8}"); break;
    case 'F': require(r == 4, "F_n needs n=4"); break;
    case 'G': require(r == 2, "G_n needs n=2"); break;
    default: require(false, "unknown family");
  }
}

std::string SimpleType::str() const {
  return std::string(1, family) + std::to_string(rank);
}

SimpleType SimpleType::parse(const std::string& s) {
  require(s.size() >= 2, "bad type string: " + s);
  return SimpleType(s[0], std::stoi(s.substr(1)));
}

int SimpleType::root_count() const {
  int n = rank;
  switch (family) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'E': return n == 6 ? 72 : (n == 7 ? 126 : 240);
    case 'F': return 48;
    case 'G': return 12;
  }
  return 0;
}

int SimpleType::algebra_dim() const { return rank + root_count(); }

namespace {

QVec basis_vec(std::size_t dim, std::size_t i, Rat c = Rat(1)) {
  QVec v(dim, Rat(0));
  v[i] = c;
  return v;
}

std::vector<QVec> generate_roots(SimpleType t, std::size_t dim) {
  std::vector<QVec> roots;
  const int n = t.rank;
  auto add = [&](QVec v) { roots.push_back(std::move(v)); };
  switch (t.family) {
    case 'A':
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
          if (i != j) {
            QVec v(dim, Rat(0));
            v[i] = 1;
            v[j] = -1;
            add(v);
          }
      break;
    case 'B':
    case 'C':
    case 'D':
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) {
              QVec v(dim, Rat(0));
              v[i] = si;
              v[j] = sj;
              add(v);
            }
      if (t.family == 'B')
        for (int i = 0; i < n; ++i)
          for (int s : {1, -1}) add(basis_vec(dim, i, Rat(s)));
      if (t.family == 'C')
        for (int i = 0; i < n; ++i)
          for (int s : {1, -1}) add(basis_vec(dim, i, Rat(2 * s)));
      break;
    case 'E': {
      const int m = (n == 6) ? 5 : (n == 7 ? 6 : 8);
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) {
              QVec v(dim, Rat(0));
              v[i] = si;
              v[j] = sj;
              add(v);
            }
      if (n == 7) {
        QVec v(dim, Rat(0));
        v[6] = 1;
        v[7] = -1;
        add(v);
        add(Rat(-1) * v);
      }
      // Half-sum roots. E8: all sign patterns with an even number of minus
      // signs. E7: e8-e7 part fixed, odd minus count among e1..e6. E6:
      // e8-e7-e6 fixed, even minus count among e1..e5.
      const int free_count = (n == 8) ? 8 : (n == 7 ? 6 : 5);
      for (int mask = 0; mask < (1 << free_count); ++mask) {
        int minus = __builtin_popcount(mask);
        QVec v(dim, Rat(0));
        for (int i = 0; i < free_count; ++i) v[i] = Rat((mask >> i) & 1 ? -1 : 1, 2);
        bool ok = false;
        bool add_negative = true;
        if (n == 8) {
          // The even-minus sign patterns are already closed under negation.
          ok = (minus % 2 == 0);
          add_negative = false;
        } else if (n == 7) {
          v[6] = Rat(-1, 2);
          v[7] = Rat(1, 2);
          ok = (minus % 2 == 1);
        } else {
          v[5] = Rat(-1, 2);
          v[6] = Rat(-1, 2);
          v[7] = Rat(1, 2);
          ok = (minus % 2 == 0);
        }
        if (ok) {
          add(v);
          if (add_negative) add(Rat(-1) * v);
        }
      }
      break;
    }
    case 'F':
      for (int i = 0; i < 4; ++i)
        for (int s : {1, -1}) add(basis_vec(dim, i, Rat(s)));
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) {
              QVec v(dim, Rat(0));
              v[i] = si;
              v[j] = sj;
              add(v);
            }
      for (int mask = 0; mask < 16; ++mask) {
        QVec v(dim, Rat(0));
        for (int i = 0; i < 4; ++i) v[i] = Rat((mask >> i) & 1 ? -1 : 1, 2);
        add(v);
      }
      break;
    case 'G': {
      auto g = [&](long a, long b, long c) {
        QVec v(dim, Rat(0));
        v[0] = a;
        v[1] = b;
        v[2] = c;
        add(v);
        add(Rat(-1) * v);
      };
      g(1, -1, 0);
      g(1, 0, -1);
      g(0, 1, -1);
      g(2, -1, -1);
      g(-1, 2, -1);
      g(-1, -1, 2);
      break;
    }
  }
  return roots;
}

std::vector<QVec> simple_roots_of(SimpleType t, std::size_t dim) {
  const int n = t.rank;
  std::vector<QVec> s;
  auto chain = [&](int count) {
    for (int i = 0; i < count; ++i) {
      QVec v(dim, Rat(0));
      v[i] = 1;
      v[i + 1] = -1;
      s.push_back(v);
    }
  };
  switch (t.family) {
    case 'A':
      chain(n);
      break;
    case 'B':
      chain(n - 1);
      s.push_back(basis_vec(dim, n - 1));
      break;
    case 'C':
      chain(n - 1);
      s.push_back(basis_vec(dim, n - 1, Rat(2)));
      break;
    case 'D': {
      chain(n - 1);
      QVec v(dim, Rat(0));
      v[n - 2] = 1;
      v[n - 1] = 1;
      s.push_back(v);
      break;
    }
    case 'E': {
      QVec a1(dim, Rat(-1, 2));
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      s.push_back(a1);
      QVec a2(dim, Rat(0));
      a2[0] = 1;
      a2[1] = 1;
      s.push_back(a2);
      for (int i = 0; i < n - 2; ++i) {
        QVec v(dim, Rat(0));
        v[i] = -1;
        v[i + 1] = 1;
        s.push_back(v);
      }
      break;
    }
    case 'F': {
      QVec a1(dim, Rat(0)), a2(dim, Rat(0));
      a1[1] = 1;
      a1[2] = -1;
      a2[2] = 1;
      a2[3] = -1;
      s.push_back(a1);
      s.push_back(a2);
      s.push_back(basis_vec(dim, 3));
      QVec a4(dim, Rat(-1, 2));
      a4[0] = Rat(1, 2);
      s.push_back(a4);
      break;
    }
    case 'G': {
      QVec a1(dim, Rat(0));
      a1[0] = -2;
      a1[1] = 1;
      a1[2] = 1;
      s.push_back(a1);
      QVec a2(dim, Rat(0));
      a2[0] = 1;
      a2[1] = -1;
      s.push_back(a2);
      break;
    }
  }
  return s;
}

std::size_t ambient_dim(SimpleType t) {
  switch (t.family) {
    case 'A': return t.rank + 1;
    case 'E': return 8;
    case 'G': return 3;
    default: return t.rank;
  }
}

RootSystem build_impl(SimpleType t) {
  RootSystem rs;
  rs.simple_type = t;
  rs.ambient = ambient_dim(t);
  rs.simple_roots = simple_roots_of(t, rs.ambient);
  rs.all_roots = generate_roots(t, rs.ambient);
  std::sort(rs.all_roots.begin(), rs.all_roots.end(), cmp_qvec{});
  for (std::size_t i = 0; i < rs.all_roots.size(); ++i)
    rs.root_index[rs.all_roots[i]] = i;

  const int n = t.rank;
  for (const QVec& a : rs.simple_roots) rs.simple_coroots.push_back(rs.coroot(a));

  // Expansion of every root in the simple basis: solve S^T c = root.
  QMatrix st(rs.ambient, n);
  for (int j = 0; j < n; ++j)
    for (std::size_t i = 0; i < rs.ambient; ++i) st.at(i, j) = rs.simple_roots[j][i];
  rs.simple_coeffs_of_root.resize(rs.all_roots.size());
  for (std::size_t r = 0; r < rs.all_roots.size(); ++r) {
    auto c = solve(st, rs.all_roots[r]);
    if (!c) throw std::logic_error("root outside simple-root span");
    rs.simple_coeffs_of_root[r] = *c;
  }

  for (std::size_t r = 0; r < rs.all_roots.size(); ++r) {
    const QVec& c = rs.simple_coeffs_of_root[r];
    bool nonneg = std::all_of(c.begin(), c.end(), [](const Rat& x) { return x >= 0; });
    if (nonneg) rs.positive_roots.push_back(rs.all_roots[r]);
  }

  // Highest root: the positive root of maximal height.
  Rat best_h(-1);
  for (const QVec& a : rs.positive_roots) {
    Rat h = 0;
    for (const Rat& c : rs.simple_coeffs_of_root[rs.index_of(a)]) h += c;
    if (h > best_h) {
      best_h = h;
      rs.highest_root = a;
    }
  }
  rs.lowest_root = Rat(-1) * rs.highest_root;
  for (const Rat& c : rs.simple_coeffs_of_root[rs.index_of(rs.highest_root)]) {
    if (!is_integer(c)) throw std::logic_error("non-integral mark");
    rs.marks.push_back(to_long(c));
  }

  rs.cartan_matrix = QMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rs.cartan_matrix.at(i, j) = dot(rs.simple_roots[i], rs.simple_coroots[j]);

  Rat max_norm(0), min_norm(0);
  for (const QVec& a : rs.all_roots) {
    Rat nn = rs.norm2(a);
    if (max_norm == 0 || nn > max_norm) max_norm = nn;
    if (min_norm == 0 || nn < min_norm) min_norm = nn;
  }
  // (beta^vee, beta^vee)_g = 2 for the short coroot, i.e. the coroot of a
  // long root: c * 4/max_norm = 2.
  rs.form_scale = max_norm / 2;
  Rat ratio = max_norm / min_norm;
  rs.length_ratio = static_cast<int>(to_long(ratio));

  for (int k = 1; k <= n; ++k) {
    QVec ek(n, Rat(0));
    ek[k - 1] = 1;
    auto c = solve(rs.cartan_matrix, ek);
    if (!c) throw std::logic_error("singular Cartan matrix");
    QVec xi(rs.ambient, Rat(0));
    for (int i = 0; i < n; ++i) xi = xi + (*c)[i] * rs.simple_coroots[i];
    rs.fundamental_coweights.push_back(xi);
  }
  return rs;
}

}  // namespace

QVec RootSystem::coroot(const QVec& root) const {
  return (Rat(2) / dot(root, root)) * root;
}

const RootSystem& build_root_system(SimpleType t) {
  static std::map<std::pair<char, int>, RootSystem> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(t.family, t.rank);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_impl(t)).first;
  return it->second;
}

Rat normalized_form(const RootSystem& rs, const QVec& x, const QVec& y) {
  if (x.size() != rs.ambient || y.size() != rs.ambient)
    throw std::invalid_argument("normalized_form: dimension mismatch");
  return rs.form_scale * dot(x, y);
}

std::pair<QVec, std::vector<int>> make_dominant(const RootSystem& rs, QVec v) {
  std::vector<int> word;
  for (;;) {
    bool moved = false;
    for (int i = 0; i < rs.rank(); ++i) {
      Rat val = dot(rs.simple_roots[i], v);
      if (val < 0) {
        v = v - val * rs.simple_coroots[i];
        word.push_back(i + 1);
        moved = true;
        break;
      }
    }
    if (!moved) return {v, word};
  }
}

std::pair<QVec, std::vector<int>> make_dominant_weight(const RootSystem& rs, QVec v) {
  std::vector<int> word;
  for (;;) {
    bool moved = false;
    for (int i = 0; i < rs.rank(); ++i) {
      Rat val = dot(rs.simple_coroots[i], v);
      if (val < 0) {
        v = v - val * rs.simple_roots[i];
        word.push_back(i + 1);
        moved = true;
        break;
      }
    }
    if (!moved) return {v, word};
  }
}

Rat coroot_pairing(const QVec& lambda, const QVec& alpha) {
  return Rat(2) * dot(lambda, alpha) / dot(alpha, alpha);
}

Rat weyl_dim(const RootSystem& rs, const QVec& lambda) {
  for (int i = 0; i < rs.rank(); ++i) {
    Rat p = coroot_pairing(lambda, rs.simple_roots[i]);
    if (p < 0 || !is_integer(p))
      throw std::invalid_argument("weyl_dim: weight not dominant integral");
  }
  QVec rho(rs.ambient, Rat(0));
  for (const QVec& a : rs.positive_roots) rho = rho + Rat(1, 2) * a;
  Rat num(1), den(1);
  for (const QVec& a : rs.positive_roots) {
    num *= coroot_pairing(lambda + rho, a);
    den *= coroot_pairing(rho, a);
  }
  return num / den;
}

Rat weyl_dim(const std::vector<const RootSystem*>& factors, const QVec& lambda) {
  Rat d(1);
  std::size_t off = 0;
  for (const RootSystem* rs : factors) {
    QVec slice(lambda.begin() + off, lambda.begin() + off + rs->ambient);
    d *= weyl_dim(*rs, slice);
    off += rs->ambient;
  }
  if (off != lambda.size()) throw std::invalid_argument("weyl_dim: weight length mismatch");
  return d;
}

QVec fundamental_coweight(const RootSystem& rs, int k) {
  if (k < 1 || k > rs.rank()) throw std::invalid_argument("coweight index out of range");
  return rs.fundamental_coweights[k - 1];
}

}  // namespace dualpair
