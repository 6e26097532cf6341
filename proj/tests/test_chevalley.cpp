#include "doctest.h"
#include "dualpair/subspace.hpp"
#include "dualpair/rng.hpp"

#include <set>
#include <sstream>

using namespace dualpair;

namespace {

const LieAlgebra& alg(char f, int r) {
  return build_chevalley(build_root_system(SimpleType(f, r)));
}

Element jacobi_defect(const LieAlgebra& L, const Element& x, const Element& y,
                      const Element& z) {
  Element a = bracket(L, bracket(L, x, y), z);
  Element b = bracket(L, bracket(L, y, z), x);
  Element c = bracket(L, bracket(L, z, x), y);
  return a + b + c;
}

bool jacobi_exhaustive(const LieAlgebra& L) {
  for (std::size_t i = 0; i < L.dim; ++i)
    for (std::size_t j = i + 1; j < L.dim; ++j)
      for (std::size_t k = j + 1; k < L.dim; ++k)
        if (!is_zero(jacobi_defect(L, L.basis_element(i), L.basis_element(j),
                                   L.basis_element(k))))
          return false;
  return true;
}

bool jacobi_sampled(const LieAlgebra& L, int samples, std::uint64_t seed) {
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    std::size_t i = rng.next() % L.dim, j = rng.next() % L.dim, k = rng.next() % L.dim;
    if (!is_zero(jacobi_defect(L, L.basis_element(i), L.basis_element(j), L.basis_element(k))))
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("dimensions") {
  CHECK(alg('A', 1).dim == 3);
  CHECK(alg('E', 8).dim == 248);
  const auto& g2 = alg('G', 2);
  CHECK(g2.dim == 14);
  int longs = 0, shorts = 0;
  for (const auto& a : g2.rs->all_roots) (dot(a, a) == 6 ? longs : shorts)++;
  CHECK(longs == 6);
  CHECK(shorts == 6);
}

TEST_CASE("sl2 relations in A1") {
  const auto& L = alg('A', 1);
  Element e = L.root_vector(L.rs->positive_roots[0]);
  Element f = L.root_vector(L.rs->lowest_root);
  Element h = L.basis_element(0);
  CHECK(bracket(L, e, f) == h);
  CHECK(bracket(L, h, e) == Rat(2) * e);
  CHECK(bracket(L, h, f) == Rat(-2) * f);
  CHECK(is_zero(bracket(L, e, e)));
}

TEST_CASE("bracket of highest-root vectors gives the expanded coroot") {
  // Oracle: expand the coroot of the highest root in the simple coroots by
  // an independent linear solve and compare coordinates.
  for (auto t : {SimpleType('E', 8), SimpleType('F', 4), SimpleType('G', 2)}) {
    const auto& L = build_chevalley(build_root_system(t));
    const auto& rs = *L.rs;
    Element e = L.root_vector(rs.highest_root);
    Element f = L.root_vector(rs.lowest_root);
    Element h = bracket(L, e, f);
    QMatrix cols(rs.ambient, rs.rank());
    for (int j = 0; j < rs.rank(); ++j)
      for (std::size_t i = 0; i < rs.ambient; ++i) cols.at(i, j) = rs.simple_coroots[j][i];
    auto c = solve(cols, rs.coroot(rs.highest_root));
    REQUIRE(c.has_value());
    Element expect = L.cartan_element(*c);
    CHECK(h == expect);
  }
}

TEST_CASE("structure constants: N zero iff sum not a root, magnitude p+1") {
  const auto& L = alg('G', 2);
  const auto& rs = *L.rs;
  for (std::size_t r = 0; r < rs.all_roots.size(); ++r)
    for (std::size_t s = 0; s < rs.all_roots.size(); ++s) {
      if (r == s) continue;
      QVec sum = rs.all_roots[r] + rs.all_roots[s];
      const auto& entries = L.basis_bracket(L.rank + r, L.rank + s);
      if (!rs.is_root(sum) && !is_zero(sum)) CHECK(entries.empty());
      if (rs.is_root(sum)) {
        REQUIRE(entries.size() == 1);
        long p = 0;
        QVec cur = rs.all_roots[s] - rs.all_roots[r];
        while (rs.is_root(cur)) {
          ++p;
          cur = cur - rs.all_roots[r];
        }
        CHECK(abs(entries[0].second) == p + 1);
      }
    }
}

TEST_CASE("Jacobi identity exhaustive for every type of rank at most 4") {
  for (auto t : {SimpleType('A', 1), SimpleType('A', 2), SimpleType('A', 3), SimpleType('A', 4),
                 SimpleType('B', 2), SimpleType('B', 3), SimpleType('B', 4), SimpleType('C', 3),
                 SimpleType('C', 4), SimpleType('D', 2), SimpleType('D', 3), SimpleType('D', 4),
                 SimpleType('F', 4), SimpleType('G', 2)})
    CHECK_MESSAGE(jacobi_exhaustive(build_chevalley(build_root_system(t))), t.str());
}

TEST_CASE("Jacobi identity sampled for E7 and E8") {
  CHECK(jacobi_sampled(alg('E', 7), 2000, kDefaultSeed));
  CHECK(jacobi_sampled(alg('E', 8), 2000, kDefaultSeed + 1));
}

TEST_CASE("invariant form is associative and ad is skew (sampled)") {
  for (auto t : {SimpleType('B', 3), SimpleType('G', 2), SimpleType('F', 4)}) {
    const auto& L = build_chevalley(build_root_system(t));
    Rng rng(7);
    for (int s = 0; s < 40; ++s) {
      Element x = L.zero(), y = L.zero(), z = L.zero();
      for (int k = 0; k < 4; ++k) {
        x[rng.next() % L.dim] += rng.small_nonzero(3);
        y[rng.next() % L.dim] += rng.small_nonzero(3);
        z[rng.next() % L.dim] += rng.small_nonzero(3);
      }
      CHECK(L.form(bracket(L, x, y), z) == L.form(x, bracket(L, y, z)));
      CHECK(L.form(bracket(L, x, y), z) == -L.form(y, bracket(L, x, z)));
    }
  }
}

TEST_CASE("grading_by") {
  const auto& L = alg('A', 2);
  SUBCASE("H = 0 gives a single level") {
    auto levels = grading_by(L, L.zero());
    REQUIRE(levels.size() == 1);
    CHECK(levels[0].space.dim() == L.dim);
  }
  SUBCASE("A2 coweight grading has levels of dims 2,4,2") {
    Element H = L.cartan_from_realization(Rat(2) * fundamental_coweight(*L.rs, 1));
    auto levels = grading_by(L, H);
    REQUIRE(levels.size() == 3);
    CHECK(levels[0].p == -1);
    CHECK(levels[0].space.dim() == 2);
    CHECK(levels[1].space.dim() == 4);
    CHECK(levels[2].space.dim() == 2);
    // Levels multiply.
    for (const auto& li : levels)
      for (const auto& lj : levels) {
        long target = li.p + lj.p;
        const GradingLevel* t = nullptr;
        for (const auto& lk : levels)
          if (lk.p == target) t = &lk;
        for (std::size_t i = 0; i < li.space.dim(); ++i)
          for (std::size_t j = 0; j < lj.space.dim(); ++j) {
            Element v = bracket(L, li.space.basis_vector(i), lj.space.basis_vector(j));
            if (t == nullptr)
              CHECK(is_zero(v));
            else
              CHECK(t->space.contains(v));
          }
      }
  }
  SUBCASE("odd eigenvalue rejected") {
    Element H = L.cartan_from_realization(fundamental_coweight(*L.rs, 1));
    CHECK_THROWS(grading_by(L, H));
  }
}

TEST_CASE("span_closure") {
  const auto& L = alg('B', 3);
  const auto& rs = *L.rs;
  QVec a = rs.positive_roots[0];
  SUBCASE("a root pair closes to its sl2") {
    auto s = span_closure(L, {L.root_vector(a), L.root_vector(Rat(-1) * a)});
    CHECK(s.dim() == 3);
    CHECK(is_bracket_closed(L, s));
  }
  SUBCASE("single nilpotent needs no closure") {
    auto s = span_closure(L, {L.root_vector(a)});
    CHECK(s.dim() == 1);
  }
  SUBCASE("monotone and idempotent") {
    auto s = span_closure(L, {L.root_vector(a), L.root_vector(Rat(-1) * a)});
    auto s2 = span_closure(L, s.basis_vectors());
    CHECK(s == s2);
    CHECK(s.contains(Subspace::span_of(L, {L.root_vector(a)})));
  }
}

TEST_CASE("solve_in_subspace") {
  SUBCASE("centralizer of a regular Cartan element is the Cartan") {
    const auto& L = alg('A', 3);
    Element h = L.cartan_element(qvec({1, 5, 2}));  // generic: all root values nonzero
    auto s = solve_in_subspace(L, [&](const Element& x) { return bracket(L, x, h); },
                               Subspace::full(L));
    CHECK(s.dim() == 3);
    for (int i = 0; i < 3; ++i) CHECK(s.contains(L.basis_element(i)));
  }
  SUBCASE("A1: [e,Y]=h has the unique solution f in g_{-2}") {
    const auto& L = alg('A', 1);
    Element e = L.root_vector(L.rs->positive_roots[0]);
    Element f = L.root_vector(L.rs->lowest_root);
    Element h = L.basis_element(0);
    auto dom = Subspace::span_of(L, {f});
    auto sol = solve_affine_in_subspace(
        L, [&](const Element& y) { return bracket(L, e, y); }, h, dom);
    REQUIRE(sol.has_value());
    CHECK(sol->particular == f);
    CHECK(sol->kernel.dim() == 0);
  }
  SUBCASE("infeasible affine systems are reported") {
    const auto& L = alg('A', 1);
    Element e = L.root_vector(L.rs->positive_roots[0]);
    auto dom = Subspace::span_of(L, {e});
    auto sol = solve_affine_in_subspace(
        L, [&](const Element& y) { return bracket(L, e, y); }, L.basis_element(0), dom);
    CHECK(!sol.has_value());
  }
  SUBCASE("kernel of ad e_delta in D4 matches the matrix-rank oracle") {
    const auto& L = alg('D', 4);
    Element e = L.root_vector(L.rs->highest_root);
    QMatrix ad = ad_matrix(L, e);
    std::size_t oracle = L.dim - rank(ad);
    auto s = centralizer_in(L, Subspace::full(L), {e});
    CHECK(s.dim() == oracle);
  }
}

TEST_CASE("subspace algebra: sum, intersection, equality") {
  const auto& L = alg('A', 2);
  auto s1 = Subspace::span_of(L, {L.basis_element(0), L.basis_element(2)});
  auto s2 = Subspace::span_of(L, {L.basis_element(0), L.basis_element(3)});
  CHECK(sum(s1, s2).dim() == 3);
  auto meet = intersect(s1, s2);
  CHECK(meet.dim() == 1);
  CHECK(meet.contains(L.basis_element(0)));
  Element combo = L.basis_element(0) + L.basis_element(2);
  auto s3 = Subspace::span_of(L, {combo, L.basis_element(2)});
  CHECK(s1 == s3);
}

TEST_CASE("structure constant dump is stable") {
  const auto& L = alg('A', 2);
  std::ostringstream o1, o2;
  dump_structure_constants(L, o1);
  dump_structure_constants(L, o2);
  CHECK(o1.str() == o2.str());
  CHECK(o1.str().find("N ") == 0);
}
