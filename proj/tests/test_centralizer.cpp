#include "doctest.h"
#include "dualpair/centralizer.hpp"
#include "dualpair/regular.hpp"
#include "dualpair/sl2.hpp"
#include "dualpair/fixtures.hpp"

using namespace dualpair;

namespace {

const LieAlgebra& alg(const char* name) {
  return build_chevalley(build_root_system(SimpleType::parse(name)));
}

SubalgebraHandle sl2_handle(const LieAlgebra& L, const Element& H) {
  auto t = build_sl2(L, H);
  REQUIRE(t.has_value());
  SubalgebraHandle h;
  h.L = &L;
  h.generators = {t->X, t->H, t->Y};
  h.span = Subspace::span_of(L, h.generators);
  h.recipe = Recipe::Sl2FromH;
  return h;
}

SubalgebraHandle regular_handle(const LieAlgebra& L, const RootSubsystem& sub) {
  SubalgebraHandle h;
  h.L = &L;
  h.span = subsystem_span(L, sub);
  h.generators = subsystem_generators(L, sub);
  h.recipe = Recipe::RegularSubsystem;
  return h;
}

}  // namespace

TEST_CASE("the centralizer of the full algebra is zero") {
  const auto& L = alg("B3");
  auto full = handle_from_span(L, Subspace::full(L), Recipe::RawSpan);
  CHECK(centralize(L, full).dim() == 0);
}

TEST_CASE("short-root sl2 in F4 centralizes to A3") {
  const auto& L = alg("F4");
  // alpha_3 is short; its coroot gives the regular index-2 sl2.
  const QVec& short_root = L.rs->simple_roots[2];
  SubalgebraHandle a;
  a.L = &L;
  a.generators = {L.root_vector(short_root), L.root_vector(Rat(-1) * short_root)};
  a.span = span_closure(L, a.generators);
  a.recipe = Recipe::RegularSubsystem;
  CHECK(a.dim() == 3);

  auto z = centralize(L, a);
  CHECK(z.dim() == 15);
  std::string why;
  auto idn = identify(L, z.span, &why);
  REQUIRE_MESSAGE(idn.has_value(), why);
  CHECK(idn->type.str() == "A3^1");

  // Double centralizer closes back onto the sl2.
  auto back = centralize(L, z);
  CHECK(back.span == a.span);
}

TEST_CASE("principal-slot A1 in F4 centralizes to G2 (split chain path)") {
  const auto& L = alg("F4");
  QVec H = Rat(2) * fundamental_coweight(*L.rs, 4);
  auto a = sl2_handle(L, L.cartan_from_realization(H));
  auto dv = defining_vector_from_realization(L, H);
  CHECK(sl2_index(L, dv) == 8);

  auto z = centralize(L, a);
  CHECK(z.dim() == 14);
  std::string why;
  auto idn = identify(L, z.span, &why);
  REQUIRE_MESSAGE(idn.has_value(), why);
  CHECK(idn->type.str() == "G2^1");

  auto back = centralize(L, z);
  CHECK(back.span == a.span);
}

TEST_CASE("identify a root sl2 as A1 with the sl2 index") {
  const auto& L = alg("G2");
  for (const QVec& root : {L.rs->simple_roots[0], L.rs->simple_roots[1]}) {
    auto s = span_closure(L, {L.root_vector(root), L.root_vector(Rat(-1) * root)});
    auto idn = identify(L, s);
    REQUIRE(idn.has_value());
    auto dvec = defining_vector_from_realization(L, L.rs->coroot(root));
    REQUIRE(idn->type.factors.size() == 1);
    CHECK(idn->type.factors[0].type == SimpleType('A', 1));
    CHECK(idn->type.factors[0].index == sl2_index(L, dvec));
  }
}

TEST_CASE("identify agrees with the subsystem decomposition on regular subalgebras") {
  for (const char* name : {"F4", "E6", "B4", "C3", "D4", "G2"}) {
    const auto& L = alg(name);
    for (const auto& [key, sub] : enumerate_max_rank_regular(*L.rs)) {
      auto h = regular_handle(L, sub);
      std::string why;
      auto idn = identify(L, h.span, &why);
      REQUIRE_MESSAGE(idn.has_value(), key << ": " << why);
      CHECK_MESSAGE(idn->type.str() == key, "identified " << idn->type.str() << " vs " << key);
    }
  }
}

TEST_CASE("identification rejects non-semisimple inputs with a diagnostic") {
  const auto& L = alg("A2");
  SUBCASE("nilpotent line") {
    auto s = Subspace::span_of(L, {L.root_vector(L.rs->positive_roots[0])});
    std::string why;
    CHECK(!identify(L, s, &why).has_value());
    CHECK(why.find("degenerate") != std::string::npos);
  }
  SUBCASE("torus with center") {
    auto s = Subspace::span_of(L, {L.basis_element(0), L.basis_element(1)});
    std::string why;
    CHECK(!identify(L, s, &why).has_value());
    CHECK(!why.empty());
  }
}

TEST_CASE("centralize is antitone on nested subalgebras") {
  const auto& L = alg("D5");
  const QVec& delta = L.rs->highest_root;
  SubalgebraHandle small;
  small.L = &L;
  small.generators = {L.root_vector(delta), L.root_vector(Rat(-1) * delta)};
  small.span = span_closure(L, small.generators);

  // Extend by the next orthogonal root pair: e1 - e2 is orthogonal to delta?
  // delta = e1+e2, pick e3-e4 and e3+e4 which commute with it.
  QVec beta(L.rs->ambient, Rat(0));
  beta[2] = 1;
  beta[3] = -1;
  SubalgebraHandle big = small;
  big.generators.push_back(L.root_vector(beta));
  big.generators.push_back(L.root_vector(Rat(-1) * beta));
  big.span = span_closure(L, big.generators);
  REQUIRE(big.span.contains(small.span));

  auto zs = centralize(L, small);
  auto zb = centralize(L, big);
  CHECK(zs.span.contains(zb.span));
}

TEST_CASE("branch_adjoint") {
  SUBCASE("the full algebra has an empty characteristic representation") {
    const auto& L = alg("B3");
    auto full = handle_from_span(L, Subspace::full(L), Recipe::RawSpan);
    auto b = branch_adjoint(L, full);
    CHECK(b.summands.empty());
    CHECK(b.trivial_multiplicity == 0);
  }
  SUBCASE("trivial multiplicity equals the centralizer dimension (F4 cases)") {
    const auto& L = alg("F4");
    // Short-root regular sl2.
    const QVec& short_root = L.rs->simple_roots[2];
    SubalgebraHandle a;
    a.L = &L;
    a.generators = {L.root_vector(short_root), L.root_vector(Rat(-1) * short_root)};
    a.span = span_closure(L, a.generators);
    auto b = branch_adjoint(L, a);
    CHECK(b.trivial_multiplicity == static_cast<long>(centralize(L, a).dim()));
    CHECK(b.trivial_multiplicity == 15);

    QVec H = Rat(2) * fundamental_coweight(*L.rs, 4);
    auto a2 = sl2_handle(L, L.cartan_from_realization(H));
    auto b2 = branch_adjoint(L, a2);
    CHECK(b2.trivial_multiplicity == 14);
  }
  SUBCASE("E7 modulo the A5+A2 subsystem splits into two 45-dimensional pieces") {
    const auto& L = alg("E7");
    auto regs = maximal_regular_max_rank(*L.rs);
    auto it = regs.find("A2^1+A5^1");
    REQUIRE(it != regs.end());
    auto a = regular_handle(L, it->second);
    auto b = branch_adjoint(L, a);
    CHECK(b.trivial_multiplicity == 0);
    REQUIRE(b.summands.size() == 2);
    CHECK(b.summands[0].dim == 45);
    CHECK(b.summands[1].dim == 45);
  }
  SUBCASE("raw-span subalgebra: the diagonal A2 inside A5") {
    const auto& L = alg("A5");
    // a = centralizer of the index-3 sl2; the (A1^3, A2^2) pair in A5.
    QVec H = realize_printed_dv(*L.rs, {1, 1, 1, -1, -1, -1});
    auto small = sl2_handle(L, L.cartan_from_realization(H));
    auto a2 = centralize(L, small);
    std::string why;
    auto idn = identify(L, a2.span, &why);
    REQUIRE_MESSAGE(idn.has_value(), why);
    CHECK(idn->type.str() == "A2^2");
    auto b = branch_adjoint(L, a2);
    CHECK(b.trivial_multiplicity == 3);
    // And the double centralizer returns the sl2.
    CHECK(centralize(L, a2).span == small.span);
  }
}
