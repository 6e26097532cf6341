#include "dualpair/centralizer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dualpair {

std::string recipe_name(Recipe r) {
  switch (r) {
    case Recipe::RegularSubsystem: return "regular-subsystem";
    case Recipe::Sl2FromH: return "sl2-from-H";
    case Recipe::Admissible: return "admissible";
    case Recipe::AdmissibleInRegular: return "admissible-in-regular";
    case Recipe::DirectSum: return "direct-sum";
    case Recipe::RawSpan: return "raw-span";
  }
  return "?";
}

SubalgebraHandle handle_from_span(const LieAlgebra& L, Subspace span, Recipe recipe) {
  SubalgebraHandle h;
  h.L = &L;
  h.generators = span.basis_vectors();
  h.span = std::move(span);
  h.recipe = recipe;
  return h;
}

SubalgebraHandle centralize(const LieAlgebra& L, const SubalgebraHandle& a) {
  Subspace z = centralizer_in(L, Subspace::full(L), a.generators);
  return handle_from_span(L, std::move(z), Recipe::RawSpan);
}

namespace {

// ---- exact spectral helpers -------------------------------------------

// Matrix of ad t restricted to V, in V-basis coordinates. Throws if V is
// not ad t stable.
QMatrix restricted_ad(const LieAlgebra& L, const Element& t, const Subspace& V) {
  QMatrix cols(L.dim, V.dim());
  QMatrix m(V.dim(), V.dim());
  // Solve V-basis expansion for each image.
  QMatrix vt = transpose(V.basis);
  for (std::size_t j = 0; j < V.dim(); ++j) {
    Element img = bracket(L, t, V.basis_vector(j));
    auto c = solve(vt, img);
    if (!c) throw std::logic_error("restricted_ad: subspace is not stable");
    for (std::size_t i = 0; i < V.dim(); ++i) m.at(i, j) = (*c)[i];
  }
  return m;
}

// Minimal polynomial of a square rational matrix by Krylov iteration with
// a couple of probe vectors, coefficients monic: p(x) = x^d + c_{d-1}x^{d-1}...
QVec min_poly(const QMatrix& A, std::uint64_t seed) {
  const std::size_t n = A.rows;
  QVec acc{Rat(1)};  // current lcm, stored low-to-high, monic
  Rng rng(seed);
  auto poly_eval_matvec = [&](const QVec& p, const QVec& v) {
    // p(A) v
    QVec out(n, Rat(0));
    QVec power = v;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k] != 0)
        for (std::size_t i = 0; i < n; ++i) out[i] += p[k] * power[i];
      if (k + 1 < p.size()) power = mat_vec(A, power);
    }
    return out;
  };
  for (int probe = 0; probe < 3; ++probe) {
    QVec v(n, Rat(0));
    if (probe == 0 && n > 0) v[0] = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (probe > 0) v[i] = rng.in_range(-2, 2);
    if (is_zero(poly_eval_matvec(acc, v))) continue;
    // Krylov sequence of w := acc(A) v.
    QVec w = poly_eval_matvec(acc, v);
    QMatrix krylov;  // rows: w, Aw, A^2 w... reduced copy for rank checks
    krylov.cols = n;
    std::vector<QVec> raw;
    QMatrix reduced;
    reduced.cols = n;
    QVec cur = w;
    for (;;) {
      QMatrix test = reduced;
      test.append_row(cur);
      rref(test);
      if (test.rows == reduced.rows) break;  // dependence found
      reduced = std::move(test);
      raw.push_back(cur);
      cur = mat_vec(A, cur);
    }
    // Solve cur = sum c_k A^k w.
    QMatrix cols(n, raw.size());
    for (std::size_t j = 0; j < raw.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) cols.at(i, j) = raw[j][i];
    auto c = solve(cols, cur);
    if (!c) throw std::logic_error("min_poly: dependence not solvable");
    // Local min poly of w: x^d - sum c_k x^k; multiply into acc.
    QVec local(raw.size() + 1, Rat(0));
    local[raw.size()] = 1;
    for (std::size_t k = 0; k < raw.size(); ++k) local[k] = -(*c)[k];
    QVec prod(acc.size() + local.size() - 1, Rat(0));
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < local.size(); ++j) prod[i + j] += acc[i] * local[j];
    acc = std::move(prod);
    if (acc.size() > n + 1) throw std::logic_error("min_poly: degree overflow");
  }
  return acc;
}

Rat poly_eval(const QVec& p, const Rat& x) {
  Rat v(0);
  for (std::size_t k = p.size(); k-- > 0;) v = v * x + p[k];
  return v;
}

// All rational roots of p (monic, rational coefficients); exact, assuming
// the factors we care about are linear over Q. Uses divisor enumeration on
// the integerized polynomial.
std::vector<Rat> rational_roots(QVec p) {
  // Scale to integer coefficients.
  mpz_class den(1);
  for (const Rat& c : p) den = den * c.get_den() / gcd(den, mpz_class(c.get_den()));
  std::vector<mpz_class> ip;
  for (const Rat& c : p) ip.push_back(mpz_class(c * den));
  // Trim trailing zeros of x^k factor.
  std::vector<Rat> roots;
  std::size_t low = 0;
  while (low < ip.size() && ip[low] == 0) ++low;
  if (low > 0) roots.push_back(Rat(0));
  if (low >= ip.size()) return roots;
  mpz_class a0 = ip[low], an = ip.back();
  if (a0 < 0) a0 = -a0;
  if (an < 0) an = -an;
  auto divisors = [](mpz_class v) {
    std::vector<mpz_class> d;
    if (v == 0) return d;
    for (mpz_class i = 1; i * i <= v; ++i)
      if (v % i == 0) {
        d.push_back(i);
        d.push_back(v / i);
      }
    return d;
  };
  // Guard against pathological coefficient blowup.
  if (mpz_sizeinbase(a0.get_mpz_t(), 2) > 64 || mpz_sizeinbase(an.get_mpz_t(), 2) > 64)
    throw std::logic_error("rational_roots: coefficient blowup");
  for (const mpz_class& num : divisors(a0))
    for (const mpz_class& d : divisors(an))
      for (int s : {1, -1}) {
        Rat cand(s * num, d);
        cand.canonicalize();
        if (poly_eval(p, cand) == 0) {
          bool dup = false;
          for (const Rat& r : roots) dup = dup || (r == cand);
          if (!dup) roots.push_back(cand);
        }
      }
  return roots;
}

// Eigen-decompose V under ad t by Lagrange projection. Requires ad t|_V to
// be semisimple with rational eigenvalues; returns eigenvalue -> subspace.
// Throws with a diagnostic otherwise.
std::vector<std::pair<Rat, Subspace>> eigen_split(const LieAlgebra& L, const Element& t,
                                                  const Subspace& V, std::uint64_t seed) {
  if (V.dim() == 0) return {};
  QMatrix A = restricted_ad(L, t, V);
  QVec mp = min_poly(A, seed);
  std::vector<Rat> roots = rational_roots(mp);
  // Semisimple with rational spectrum iff minpoly splits into distinct
  // linear factors; degree check certifies it.
  if (roots.size() + 1 != mp.size())
    throw std::logic_error("eigen_split: operator has irrational or repeated spectrum");
  std::vector<std::pair<Rat, Subspace>> out;
  for (const Rat& lam : roots) {
    // Projection onto the lam eigenspace: prod_{mu != lam} (A-mu)/(lam-mu).
    QMatrix rows;
    rows.cols = L.dim;
    for (std::size_t i = 0; i < V.dim(); ++i) {
      Element v = V.basis_vector(i);
      Rat scale(1);
      for (const Rat& mu : roots) {
        if (mu == lam) continue;
        v = bracket(L, t, v) - mu * v;
        scale *= (lam - mu);
      }
      rows.append_row((1 / scale) * v);
    }
    Subspace es(L, std::move(rows));
    if (es.dim() > 0) out.emplace_back(lam, std::move(es));
  }
  std::size_t total = 0;
  for (auto& [lam, es] : out) total += es.dim();
  if (total != V.dim()) throw std::logic_error("eigen_split: eigenspaces do not fill the space");
  return out;
}

Subspace derived_algebra(const LieAlgebra& L, const Subspace& s) {
  QMatrix rows;
  rows.cols = L.dim;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      rows.append_row(bracket(L, s.basis_vector(i), s.basis_vector(j)));
  return Subspace(L, std::move(rows));
}

Subspace cartan_subspace(const LieAlgebra& L) {
  std::vector<Element> h;
  for (int i = 0; i < L.rank; ++i) h.push_back(L.basis_element(i));
  return Subspace::span_of(L, h);
}

// Some nonzero nilpotent elements of s, cheapest sources first.
std::vector<Element> nilpotent_candidates(const LieAlgebra& L, const Subspace& s,
                                          std::uint64_t seed) {
  std::vector<Element> out;
  std::vector<Element> pos, neg;
  for (std::size_t r = 0; r < L.rs->all_roots.size(); ++r) {
    const QVec& c = L.rs->simple_coeffs_of_root[r];
    bool nonneg = std::all_of(c.begin(), c.end(), [](const Rat& x) { return x >= 0; });
    (nonneg ? pos : neg).push_back(L.basis_element(L.rank + r));
  }
  for (const auto& half : {pos, neg}) {
    Subspace meet = intersect(s, Subspace::span_of(L, half));
    for (std::size_t i = 0; i < meet.dim(); ++i) out.push_back(meet.basis_vector(i));
  }
  if (!out.empty()) return out;
  // Jordan route: nilpotent parts via the Jordan-Chevalley Newton iteration
  // on the restricted ad matrix. Generic elements are semisimple, so probe
  // the structured basis vectors first and sparse two-term combinations
  // after.
  Rng rng(seed);
  const int basis_probes = static_cast<int>(s.dim());
  for (int attempt = 0; attempt < basis_probes + 8 && out.empty(); ++attempt) {
    Element x = L.zero();
    if (attempt < basis_probes) {
      x = s.basis_vector(attempt);
    } else {
      std::size_t i = rng.next() % s.dim(), j = rng.next() % s.dim();
      Element bi = s.basis_vector(i), bj = s.basis_vector(j);
      long ci = rng.small_nonzero(2), cj = rng.small_nonzero(2);
      for (std::size_t k = 0; k < L.dim; ++k) x[k] = Rat(ci) * bi[k] + Rat(cj) * bj[k];
    }
    if (is_zero(x)) continue;
    QMatrix A = restricted_ad(L, x, s);
    QVec mp = min_poly(A, mix_key(seed, attempt + 101));
    // Squarefree part f = mp / gcd(mp, mp').
    auto poly_derive = [](const QVec& p) {
      QVec d(p.size() > 1 ? p.size() - 1 : 1, Rat(0));
      for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = Rat(static_cast<long>(k)) * p[k];
      return d;
    };
    auto poly_mod = [](QVec a, const QVec& b) {
      while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
        Rat f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[off + k] -= f * b[k];
        while (a.size() > 1 && a.back() == 0) a.pop_back();
        if (a.size() < b.size()) break;
      }
      return a;
    };
    auto poly_gcd = [&](QVec a, QVec b) {
      while (!(b.size() == 1 && b[0] == 0)) {
        QVec r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
      }
      Rat lead = a.back();
      for (auto& c : a) c /= lead;
      return a;
    };
    auto poly_div = [&](const QVec& a, const QVec& b) {
      QVec rem = a, q(a.size() - b.size() + 1, Rat(0));
      while (rem.size() >= b.size() && !(rem.size() == 1 && rem[0] == 0)) {
        Rat f = rem.back() / b.back();
        std::size_t off = rem.size() - b.size();
        q[off] = f;
        for (std::size_t k = 0; k < b.size(); ++k) rem[off + k] -= f * b[k];
        while (rem.size() > 1 && rem.back() == 0) rem.pop_back();
        if (rem.size() < b.size()) break;
      }
      return q;
    };
    QVec g = poly_gcd(mp, poly_derive(mp));
    if (g.size() == 1) continue;  // squarefree: x is semisimple, no nilpotent part
    QVec f = poly_div(mp, g);
    // Newton: B <- B - f(B) f'(B)^{-1} until f(B) = 0; limit iterations.
    auto poly_of_matrix = [&](const QVec& p, const QMatrix& M) {
      QMatrix out(M.rows, M.rows);
      QMatrix power = identity(M.rows);
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] != 0)
          for (std::size_t i = 0; i < M.rows * M.rows; ++i) out.a[i] += p[k] * power.a[i];
        if (k + 1 < p.size()) power = mat_mul(power, M);
      }
      return out;
    };
    QMatrix B = A;
    QVec fd = poly_derive(f);
    bool done = false;
    for (int it = 0; it < 10 && !done; ++it) {
      QMatrix fB = poly_of_matrix(f, B);
      bool zero = std::all_of(fB.a.begin(), fB.a.end(), [](const Rat& v) { return v == 0; });
      if (zero) {
        done = true;
        break;
      }
      QMatrix fdB = poly_of_matrix(fd, B);
      // Solve fdB * X = fB column by column.
      QMatrix X(B.rows, B.rows);
      for (std::size_t col = 0; col < B.rows; ++col) {
        QVec rhs(B.rows);
        for (std::size_t i = 0; i < B.rows; ++i) rhs[i] = fB.at(i, col);
        auto sol = solve(fdB, rhs);
        if (!sol) break;
        for (std::size_t i = 0; i < B.rows; ++i) X.at(i, col) = (*sol)[i];
      }
      for (std::size_t i = 0; i < B.rows * B.rows; ++i) B.a[i] -= X.a[i];
    }
    if (!done) continue;
    // Nilpotent part N = A - B corresponds to an element of s.
    QMatrix N = A;
    for (std::size_t i = 0; i < N.a.size(); ++i) N.a[i] -= B.a[i];
    bool zero = std::all_of(N.a.begin(), N.a.end(), [](const Rat& v) { return v == 0; });
    if (zero) continue;
    // Solve ad(xi)|_s = N over xi in s.
    QMatrix sys(s.dim() * s.dim(), s.dim());
    QVec rhs(s.dim() * s.dim(), Rat(0));
    for (std::size_t j = 0; j < s.dim(); ++j) {
      QMatrix adj = restricted_ad(L, s.basis_vector(j), s);
      for (std::size_t r = 0; r < s.dim(); ++r)
        for (std::size_t c2 = 0; c2 < s.dim(); ++c2) sys.at(r * s.dim() + c2, j) = adj.at(r, c2);
    }
    for (std::size_t r = 0; r < s.dim(); ++r)
      for (std::size_t c2 = 0; c2 < s.dim(); ++c2) rhs[r * s.dim() + c2] = N.at(r, c2);
    auto sol = solve(sys, rhs);
    if (!sol) continue;
    Element xi = L.zero();
    for (std::size_t j = 0; j < s.dim(); ++j)
      if ((*sol)[j] != 0) {
        Element b = s.basis_vector(j);
        for (std::size_t k = 0; k < L.dim; ++k) xi[k] += (*sol)[j] * b[k];
      }
    if (!is_zero(xi)) out.push_back(xi);
  }
  return out;
}

// Jacobson-Morozov inside a bracket-closed subspace: complete nilpotent e
// to (e, h, f).
std::optional<std::pair<Element, Element>> jm_complete(const LieAlgebra& L, const Subspace& s,
                                                       const Element& e) {
  // h = [e, x] with [[e,x], e] = 2e.
  auto hx = solve_affine_in_subspace(
      L, [&](const Element& x) { return bracket(L, bracket(L, e, x), e); }, Rat(2) * e, s);
  if (!hx) return std::nullopt;
  Element h = bracket(L, e, hx->particular);
  // f with [e,f] = h and [h,f] = -2f: stack both constraints.
  if (s.dim() == 0) return std::nullopt;
  QMatrix m(2 * L.dim, s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j) {
    Element bj = s.basis_vector(j);
    Element c1 = bracket(L, e, bj);
    Element c2 = bracket(L, h, bj) + Rat(2) * bj;
    for (std::size_t i = 0; i < L.dim; ++i) {
      m.at(i, j) = c1[i];
      m.at(L.dim + i, j) = c2[i];
    }
  }
  QVec rhs(2 * L.dim, Rat(0));
  for (std::size_t i = 0; i < L.dim; ++i) rhs[i] = h[i];
  auto c = solve(m, rhs);
  if (!c) return std::nullopt;
  Element f = L.zero();
  for (std::size_t j = 0; j < s.dim(); ++j)
    if ((*c)[j] != 0) {
      Element bj = s.basis_vector(j);
      for (std::size_t k = 0; k < L.dim; ++k) f[k] += (*c)[j] * bj[k];
    }
  return std::make_pair(h, f);
}

// Split maximal toral subalgebra of a semisimple s, as a list of commuting
// elements with rational ad-spectra. Empty optional on failure.
std::optional<std::vector<Element>> split_cartan_chain(const LieAlgebra& L, const Subspace& s,
                                                       std::uint64_t seed,
                                                       std::string* why) {
  std::vector<Element> torus;
  Subspace cur = s;
  Subspace h_l = cartan_subspace(L);
  int guard = 0;
  while (cur.dim() > 0) {
    if (++guard > L.rank + 8) {
      if (why) *why = "split chain did not terminate";
      return std::nullopt;
    }
    Subspace seed_toral = intersect(cur, h_l);
    Subspace c;
    if (seed_toral.dim() > 0) {
      c = centralizer_in(L, cur, seed_toral.basis_vectors());
    } else {
      auto nils = nilpotent_candidates(L, cur, mix_key(seed, guard));
      if (nils.empty()) {
        if (why) *why = "no rational nilpotent found while splitting a Cartan";
        return std::nullopt;
      }
      bool ok = false;
      for (const Element& e : nils) {
        auto hf = jm_complete(L, cur, e);
        if (!hf) continue;
        c = centralizer_in(L, cur, {hf->first});
        ok = true;
        break;
      }
      if (!ok) {
        if (why) *why = "Jacobson-Morozov completion failed (input not semisimple?)";
        return std::nullopt;
      }
    }
    // Center of the centralizer joins the torus; recurse into the derived
    // algebra.
    Subspace center;
    {
      QMatrix m(c.dim() * L.dim, c.dim());
      for (std::size_t j = 0; j < c.dim(); ++j) {
        Element bj = c.basis_vector(j);
        for (std::size_t t = 0; t < c.dim(); ++t) {
          Element br = bracket(L, bj, c.basis_vector(t));
          for (std::size_t i = 0; i < L.dim; ++i) m.at(t * L.dim + i, j) = br[i];
        }
      }
      QMatrix k = kernel(m);
      QMatrix rows;
      rows.cols = L.dim;
      for (std::size_t r = 0; r < k.rows; ++r) {
        Element v = L.zero();
        for (std::size_t j = 0; j < c.dim(); ++j)
          if (k.at(r, j) != 0) {
            Element bj = c.basis_vector(j);
            for (std::size_t q = 0; q < L.dim; ++q) v[q] += k.at(r, j) * bj[q];
          }
        rows.append_row(v);
      }
      center = Subspace(L, std::move(rows));
    }
    for (std::size_t i = 0; i < center.dim(); ++i) torus.push_back(center.basis_vector(i));
    cur = derived_algebra(L, c);
  }
  return torus;
}

}  // namespace

std::map<QVec, Subspace, cmp_qvec> joint_weight_spaces(const LieAlgebra& L,
                                                       const std::vector<Element>& torus,
                                                       const Subspace& space) {
  std::map<QVec, Subspace, cmp_qvec> blocks;
  blocks.emplace(QVec{}, space);
  int level = 0;
  for (const Element& t : torus) {
    ++level;
    // Fast path: t inside the ambient Cartan acts diagonally on basis
    // coordinates; project basis rows by coordinate weight.
    bool in_h = true;
    for (std::size_t i = L.rank; i < L.dim; ++i)
      if (t[i] != 0) in_h = false;
    std::map<QVec, Subspace, cmp_qvec> next;
    for (auto& [w, blk] : blocks) {
      if (blk.dim() == 0) continue;
      std::vector<std::pair<Rat, Subspace>> parts;
      if (in_h) {
        std::map<Rat, QMatrix> rowsets;
        for (std::size_t i = 0; i < blk.dim(); ++i) {
          Element v = blk.basis_vector(i);
          std::map<Rat, Element> split;
          for (std::size_t k = 0; k < L.dim; ++k) {
            if (v[k] == 0) continue;
            Rat val = k < static_cast<std::size_t>(L.rank)
                          ? Rat(0)
                          : L.root_value(L.rs->all_roots[k - L.rank], t);
            auto it = split.find(val);
            if (it == split.end()) it = split.emplace(val, L.zero()).first;
            it->second[k] = v[k];
          }
          for (auto& [val, piece] : split) {
            auto it = rowsets.find(val);
            if (it == rowsets.end()) {
              QMatrix m;
              m.cols = L.dim;
              it = rowsets.emplace(val, std::move(m)).first;
            }
            it->second.append_row(piece);
          }
        }
        std::size_t total = 0;
        for (auto& [val, rows] : rowsets) {
          Subspace sp(L, std::move(rows));
          total += sp.dim();
          parts.emplace_back(val, std::move(sp));
        }
        if (total != blk.dim())
          throw std::logic_error("joint_weight_spaces: block not stable under the torus");
      } else {
        parts = eigen_split(L, t, blk, mix_key(kDefaultSeed, level));
      }
      for (auto& [val, sp] : parts) {
        QVec nw = w;
        nw.push_back(val);
        next.emplace(std::move(nw), std::move(sp));
      }
    }
    blocks = std::move(next);
  }
  return blocks;
}

std::optional<Identification> identify(const LieAlgebra& L, const Subspace& s,
                                       std::string* failure_reason, std::uint64_t seed) {
  auto fail = [&](const std::string& r) {
    if (failure_reason) *failure_reason = r;
    return std::nullopt;
  };
  Identification out;
  if (s.dim() == 0) {
    out.root_data.dual_form = QMatrix(0, 0);
    return out;
  }

  // Reductivity witness: the restricted invariant form must be
  // nondegenerate.
  {
    QMatrix gram(s.dim(), s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t j = i; j < s.dim(); ++j)
        gram.at(i, j) = gram.at(j, i) = L.form(s.basis_vector(i), s.basis_vector(j));
    if (rank(gram) != s.dim())
      return fail("degenerate restricted form: subspace is not reductive in g");
  }

  // Rank estimate from generic centralizers.
  std::size_t r_est = s.dim();
  {
    Rng rng(mix_key(seed, 0xabcdef));
    for (int probe = 0; probe < 3; ++probe) {
      Element x = L.zero();
      for (std::size_t i = 0; i < s.dim(); ++i) {
        Element b = s.basis_vector(i);
        long c = rng.small_nonzero(5);
        for (std::size_t k = 0; k < L.dim; ++k) x[k] += Rat(c) * b[k];
      }
      Subspace z = centralizer_in(L, s, {x});
      r_est = std::min(r_est, z.dim());
    }
  }

  // Split Cartan: fast path through the ambient Cartan, else the chain.
  std::vector<Element> torus;
  Subspace meet = intersect(s, cartan_subspace(L));
  if (meet.dim() == r_est && centralizer_in(L, s, meet.basis_vectors()) == meet) {
    torus = meet.basis_vectors();
  } else {
    std::string why;
    auto chain = split_cartan_chain(L, s, seed, &why);
    if (!chain) return fail(why);
    torus = *chain;
    if (torus.size() != r_est)
      return fail("split torus rank " + std::to_string(torus.size()) +
                  " does not match the generic rank " + std::to_string(r_est));
    for (std::size_t i = 0; i < torus.size(); ++i)
      for (std::size_t j = i + 1; j < torus.size(); ++j)
        if (!is_zero(bracket(L, torus[i], torus[j]))) return fail("split torus is not abelian");
  }
  out.cartan = torus;

  // Joint weights of s.
  std::map<QVec, Subspace, cmp_qvec> weights;
  try {
    weights = joint_weight_spaces(L, torus, s);
  } catch (const std::exception& ex) {
    return fail(std::string("weight decomposition failed: ") + ex.what());
  }
  QVec zero_w(torus.size(), Rat(0));
  auto zit = weights.find(zero_w);
  if (zit == weights.end() || zit->second.dim() != torus.size())
    return fail("zero weight space does not match the torus: nonzero center or rank defect");

  // Roots and sl2 triples.
  std::map<QVec, Element, cmp_qvec> root_vec;
  for (auto& [w, sp] : weights) {
    if (w == zero_w) continue;
    if (sp.dim() != 1) return fail("a nonzero weight has multiplicity > 1: not semisimple");
    root_vec[w] = sp.basis_vector(0);
  }
  std::vector<QVec> positive;
  for (auto& [w, v] : root_vec) {
    bool pos = false;
    for (const Rat& c : w) {
      if (c != 0) {
        pos = c > 0;
        break;
      }
    }
    if (pos) positive.push_back(w);
  }
  QMatrix torus_cols(L.dim, torus.size());
  for (std::size_t j = 0; j < torus.size(); ++j)
    for (std::size_t i = 0; i < L.dim; ++i) torus_cols.at(i, j) = torus[j][i];
  auto value_on = [&](const QVec& w, const Element& h) {
    auto c = solve(torus_cols, h);
    if (!c) throw std::logic_error("coroot outside torus span");
    Rat v(0);
    for (std::size_t k = 0; k < w.size(); ++k) v += w[k] * (*c)[k];
    return v;
  };
  for (const QVec& w : positive) {
    QVec neg = Rat(-1) * w;
    auto nit = root_vec.find(neg);
    if (nit == root_vec.end()) return fail("root without its negative: degenerate pairing");
    Element x = root_vec[w];
    Element y = nit->second;
    Element h = bracket(L, x, y);
    Rat c = value_on(w, h);
    if (c == 0) return fail("vanishing coroot pairing");
    y = (Rat(2) / c) * y;
    h = bracket(L, x, y);
    out.triples.push_back({w, x, h, y});
  }

  // Simple roots: positive roots that are not sums of two positives.
  std::set<QVec, cmp_qvec> posset(positive.begin(), positive.end());
  std::vector<QVec> simple;
  for (const QVec& w : positive) {
    bool sum = false;
    for (const QVec& u : positive) {
      if (sum) break;
      QVec rest = w - u;
      if (!is_zero(rest) && posset.count(rest)) sum = true;
    }
    if (!sum) simple.push_back(w);
  }
  if (simple.size() != torus.size()) return fail("simple system size differs from the rank");

  auto triple_of = [&](const QVec& w) -> const Identification::RootTriple& {
    for (const auto& t : out.triples)
      if (t.root == w) return t;
    throw std::logic_error("missing triple");
  };
  QMatrix cartan_mat(simple.size(), simple.size());
  for (std::size_t i = 0; i < simple.size(); ++i)
    for (std::size_t j = 0; j < simple.size(); ++j) {
      Rat v = value_on(simple[i], triple_of(simple[j]).h);
      if (!is_integer(v)) return fail("non-integral Cartan pairing");
      cartan_mat.at(i, j) = v;
    }
  std::vector<DiagramComponent> comps;
  try {
    comps = classify_from_cartan(cartan_mat);
  } catch (const std::exception& ex) {
    return fail(std::string("diagram classification failed: ") + ex.what());
  }

  // Per-factor index: the normalized square of the coroot of a long factor
  // root, halved. Long roots appear among the factor's simples.
  for (const auto& comp : comps) {
    // The factor's long roots occur among its simples, and a long root has
    // the short coroot, so the index is the minimal (h,h)_g / 2 over the
    // factor's simple coroots.
    Rat min_coroot_norm(0);
    for (int i : comp.order) {
      const Element& h = triple_of(simple[i]).h;
      Rat nn = L.form(h, h);
      if (min_coroot_norm == 0 || nn < min_coroot_norm) min_coroot_norm = nn;
    }
    SimpleFactor f;
    f.type = canonical_low_rank(comp.type);
    f.index = min_coroot_norm / 2;
    if (!is_integer(f.index) || f.index <= 0)
      return fail("factor index is not a positive integer: " + rat_str(f.index));
    out.factor_types.push_back(f);
    out.type.factors.push_back(f);
  }
  out.type.canonicalize();

  // Abstract root data for branching.
  QMatrix gram(torus.size(), torus.size());
  for (std::size_t i = 0; i < torus.size(); ++i)
    for (std::size_t j = 0; j < torus.size(); ++j) gram.at(i, j) = L.form(torus[i], torus[j]);
  QMatrix inv(torus.size(), torus.size());
  for (std::size_t col = 0; col < torus.size(); ++col) {
    QVec e(torus.size(), Rat(0));
    e[col] = 1;
    auto x = solve(gram, e);
    if (!x) return fail("degenerate form on the torus");
    for (std::size_t i = 0; i < torus.size(); ++i) inv.at(i, col) = (*x)[i];
  }
  out.root_data.dual_form = inv;
  out.root_data.positive_roots = positive;
  out.root_data.simple_roots = simple;
  return out;
}

bool identify_handle(const LieAlgebra& L, SubalgebraHandle& h, std::string* failure_reason) {
  auto idn = identify(L, h.span, failure_reason);
  if (!idn) return false;
  h.identified = idn->type;
  h.cartan = idn->cartan;
  return true;
}

BranchingDecomposition branch_adjoint(const LieAlgebra& L, const SubalgebraHandle& a) {
  auto idn = identify(L, a.span);
  if (!idn) throw std::invalid_argument("branch_adjoint: identification failed");
  BranchingDecomposition out;
  out.chi_dim = Rat(static_cast<long>(L.dim)) - Rat(static_cast<long>(a.span.dim()));
  if (idn->cartan.empty()) throw std::invalid_argument("branch_adjoint: trivial subalgebra");

  auto blocks = joint_weight_spaces(L, idn->cartan, Subspace::full(L));
  std::map<QVec, long, cmp_qvec> mult;
  for (auto& [w, sp] : blocks) mult[w] = static_cast<long>(sp.dim());
  // Remove a's own adjoint copy.
  QVec zero_w(idn->cartan.size(), Rat(0));
  mult[zero_w] -= static_cast<long>(idn->cartan.size());
  for (const QVec& w : idn->root_data.positive_roots) {
    mult[w] -= 1;
    mult[Rat(-1) * w] -= 1;
  }
  for (auto& [w, m] : mult)
    if (m < 0) throw std::logic_error("branch_adjoint: adjoint copy does not embed");

  auto peeled = peel_weights(idn->root_data, mult);
  Rat total(0);
  for (const auto& p : peeled) {
    total += Rat(p.multiplicity) * p.dim;
    if (is_zero(p.highest_weight))
      out.trivial_multiplicity = p.multiplicity;
    else
      out.summands.push_back(p);
  }
  if (total != out.chi_dim)
    throw std::logic_error("branch_adjoint: dimension bookkeeping failed");
  return out;
}

}  // namespace dualpair
