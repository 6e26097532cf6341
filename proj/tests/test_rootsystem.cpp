#include "doctest.h"
#include "dualpair/rootsystem.hpp"

#include <set>

using namespace dualpair;

namespace {

const std::vector<SimpleType>& all_types_rank8() {
  static std::vector<SimpleType> ts = [] {
    std::vector<SimpleType> v;
    for (int n = 1; n <= 8; ++n) v.emplace_back('A', n);
    for (int n = 2; n <= 8; ++n) v.emplace_back('B', n);
    for (int n = 2; n <= 8; ++n) v.emplace_back('C', n);
    for (int n = 2; n <= 8; ++n) v.emplace_back('D', n);
    for (int n = 6; n <= 8; ++n) v.emplace_back('E', n);
    v.emplace_back('F', 4);
    v.emplace_back('G', 2);
    return v;
  }();
  return ts;
}

}  // namespace

TEST_CASE("rank constraints enforced at construction") {
  CHECK_THROWS(SimpleType('A', 0));
  CHECK_THROWS(SimpleType('E', 5));
  CHECK_THROWS(SimpleType('F', 5));
  CHECK_THROWS(SimpleType('G', 3));
  CHECK_THROWS(SimpleType('X', 4));
}

TEST_CASE("E7 marks follow the highest-root expansion") {
  const auto& rs = build_root_system(SimpleType('E', 7));
  CHECK(rs.marks == std::vector<long>{2, 2, 3, 4, 3, 2, 1});
}

TEST_CASE("G2 realization matches the plane x1+x2+x3=0 chart") {
  const auto& rs = build_root_system(SimpleType('G', 2));
  CHECK(rs.simple_roots[0] == qvec({-2, 1, 1}));
  CHECK(rs.simple_roots[1] == qvec({1, -1, 0}));
  CHECK(rs.simple_coroots[0] == QVec{rat(-2, 3), rat(1, 3), rat(1, 3)});
  CHECK(rs.simple_coroots[1] == qvec({1, -1, 0}));
  CHECK(rs.length_ratio == 3);
  CHECK(rs.marks == std::vector<long>{2, 3});
}

TEST_CASE("A1 is the smallest case") {
  const auto& rs = build_root_system(SimpleType('A', 1));
  CHECK(rs.positive_roots.size() == 1);
  CHECK(rs.marks == std::vector<long>{1});
}

TEST_CASE("normalized form is derived from the short-coroot condition") {
  const auto& g2 = build_root_system(SimpleType('G', 2));
  CHECK(g2.form_scale == 3);
  CHECK(normalized_form(g2, g2.simple_coroots[0], g2.simple_coroots[0]) == 2);

  for (int m : {2, 3}) {
    const auto& d = build_root_system(SimpleType('D', 2 * m));
    QVec z(d.ambient, Rat(0));
    z[0] = 1;
    z[1] = -1;
    CHECK(d.form_scale == 1);
    CHECK(normalized_form(d, z, z) == 2);
  }

  const auto& b3 = build_root_system(SimpleType('B', 3));
  QVec zero(b3.ambient, Rat(0));
  CHECK(normalized_form(b3, zero, zero) == 0);
  CHECK_THROWS(normalized_form(b3, qvec({1, 0}), qvec({1, 0, 0})));
}

TEST_CASE("short coroots have normalized square length 2, long roots dual length 2") {
  for (const auto& t : all_types_rank8()) {
    const auto& rs = build_root_system(t);
    Rat min_coroot_norm(0);
    for (const auto& a : rs.all_roots) {
      QVec cv = rs.coroot(a);
      Rat nn = dot(cv, cv);
      if (min_coroot_norm == 0 || nn < min_coroot_norm) min_coroot_norm = nn;
    }
    CHECK(rs.form_scale * min_coroot_norm == 2);
    Rat max_root_norm(0);
    for (const auto& a : rs.all_roots)
      if (dot(a, a) > max_root_norm) max_root_norm = dot(a, a);
    CHECK(max_root_norm / rs.form_scale == 2);  // (beta,beta)_{g*} = 2, beta long
  }
}

TEST_CASE("positive root counts match the algebra dimensions") {
  for (const auto& t : all_types_rank8()) {
    const auto& rs = build_root_system(t);
    int dim = t.algebra_dim();
    CHECK(static_cast<int>(rs.positive_roots.size()) == (dim - t.rank) / 2);
    CHECK(static_cast<int>(rs.all_roots.size()) == dim - t.rank);
  }
  CHECK(build_root_system(SimpleType('E', 8)).positive_roots.size() == 120);
}

TEST_CASE("crystallographic condition and reflection closure") {
  for (const auto& t : all_types_rank8()) {
    if (t.rank > 6 && t.family != 'E') continue;  // keep runtime modest
    const auto& rs = build_root_system(t);
    for (const auto& a : rs.all_roots) {
      for (const auto& b : rs.all_roots) {
        Rat p = coroot_pairing(a, b);
        REQUIRE(is_integer(p));
        QVec refl = a - p * b;  // s_b(a)
        REQUIRE(rs.is_root(refl));
      }
    }
  }
}

TEST_CASE("highest root equals the mark combination and pairs correctly") {
  for (const auto& t : all_types_rank8()) {
    const auto& rs = build_root_system(t);
    QVec combo(rs.ambient, Rat(0));
    for (int k = 0; k < t.rank; ++k) combo = combo + Rat(rs.marks[k]) * rs.simple_roots[k];
    CHECK(combo == rs.highest_root);
    CHECK(rs.lowest_root == Rat(-1) * rs.highest_root);
    for (int j = 0; j < t.rank; ++j) {
      Rat lhs = 0;
      for (int k = 0; k < t.rank; ++k)
        lhs += Rat(rs.marks[k]) * dot(rs.simple_roots[k], rs.simple_coroots[j]);
      CHECK(lhs == dot(rs.highest_root, rs.simple_coroots[j]));
    }
  }
}

TEST_CASE("length ratios") {
  CHECK(build_root_system(SimpleType('A', 3)).length_ratio == 1);
  CHECK(build_root_system(SimpleType('D', 5)).length_ratio == 1);
  CHECK(build_root_system(SimpleType('E', 6)).length_ratio == 1);
  CHECK(build_root_system(SimpleType('B', 4)).length_ratio == 2);
  CHECK(build_root_system(SimpleType('C', 3)).length_ratio == 2);
  CHECK(build_root_system(SimpleType('F', 4)).length_ratio == 2);
  CHECK(build_root_system(SimpleType('G', 2)).length_ratio == 3);
}

TEST_CASE("make_dominant: worked examples") {
  const auto& a5 = build_root_system(SimpleType('A', 5));
  auto [w, word] = make_dominant(a5, qvec({1, 1, 1, -1, -1, -1}));
  CHECK(w == qvec({1, 1, 1, -1, -1, -1}));
  CHECK(word.empty());

  const auto& b2 = build_root_system(SimpleType('B', 2));
  QVec zero(2, Rat(0));
  auto [z, zword] = make_dominant(b2, zero);
  CHECK(z == zero);
  CHECK(zword.empty());
}

TEST_CASE("make_dominant B2 against brute-forced Weyl orbit") {
  // Oracle: generate the full orbit of v under simple reflections and pick
  // the unique element with all simple values >= 0.
  const auto& b2 = build_root_system(SimpleType('B', 2));
  QVec v = qvec({-1, -3});
  std::set<QVec, cmp_qvec> orbit{v};
  for (;;) {
    std::set<QVec, cmp_qvec> next = orbit;
    for (const auto& x : orbit)
      for (int i = 0; i < 2; ++i)
        next.insert(x - dot(b2.simple_roots[i], x) * b2.simple_coroots[i]);
    if (next.size() == orbit.size()) break;
    orbit.swap(next);
  }
  CHECK(orbit.size() == 8);
  QVec dominant_oracle;
  for (const auto& x : orbit) {
    bool dom = true;
    for (int i = 0; i < 2; ++i)
      if (dot(b2.simple_roots[i], x) < 0) dom = false;
    if (dom) dominant_oracle = x;
  }
  CHECK(dominant_oracle == qvec({3, 1}));

  auto [w, word] = make_dominant(b2, v);
  CHECK(w == dominant_oracle);
  // Replaying the word on v reproduces w.
  QVec replay = v;
  for (int i : word)
    replay = replay - dot(b2.simple_roots[i - 1], replay) * b2.simple_coroots[i - 1];
  CHECK(replay == w);

  // Idempotence.
  auto [w2, word2] = make_dominant(b2, w);
  CHECK(w2 == w);
  CHECK(word2.empty());
}

TEST_CASE("make_dominant idempotence across types") {
  for (const auto& t : all_types_rank8()) {
    const auto& rs = build_root_system(t);
    QVec v(rs.ambient, Rat(0));
    for (std::size_t i = 0; i < rs.ambient; ++i) v[i] = rat((long)(i * i) % 7 - 3);
    auto [w, word] = make_dominant(rs, v);
    auto [w2, word2] = make_dominant(rs, w);
    CHECK(w2 == w);
    CHECK(word2.empty());
  }
}

TEST_CASE("weyl_dim worked examples") {
  const auto& a2 = build_root_system(SimpleType('A', 2));
  CHECK(weyl_dim(a2, a2.highest_root) == 8);

  const auto& a4 = build_root_system(SimpleType('A', 4));
  QVec lam = qvec({1, 1, 0, 0, 0, 1, 0, 0, 0, 0});
  CHECK(weyl_dim({&a4, &a4}, lam) == 50);

  const auto& a1 = build_root_system(SimpleType('A', 1));
  CHECK(weyl_dim({&a2, &a1}, qvec({2, 0, 0, 1, 1})) == 6);
  CHECK(weyl_dim({&a2, &a1}, qvec({1, 1, 0, 2, 0})) == 9);

  for (const auto& t : all_types_rank8()) {
    const auto& rs = build_root_system(t);
    CHECK(weyl_dim(rs, QVec(rs.ambient, Rat(0))) == 1);
  }

  CHECK_THROWS(weyl_dim(a2, qvec({0, 1, 0})));  // not dominant
}

TEST_CASE("fundamental coweights solve the defining system") {
  const auto& a1 = build_root_system(SimpleType('A', 1));
  CHECK(fundamental_coweight(a1, 1) == Rat(1, 2) * a1.simple_coroots[0]);

  const auto& e7 = build_root_system(SimpleType('E', 7));
  QVec xi = fundamental_coweight(e7, 4);
  for (int j = 0; j < 7; ++j)
    CHECK(dot(e7.simple_roots[j], xi) == (j == 3 ? 1 : 0));

  const auto& b2 = build_root_system(SimpleType('B', 2));
  CHECK(fundamental_coweight(b2, 1) == qvec({1, 0}));

  CHECK_THROWS(fundamental_coweight(b2, 3));
}
