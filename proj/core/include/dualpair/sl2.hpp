#ifndef DUALPAIR_SL2_HPP
#define DUALPAIR_SL2_HPP

#include "dualpair/subspace.hpp"
#include "dualpair/rng.hpp"

#include <optional>
#include <vector>

namespace dualpair {

struct Sl2Triple {
  Element X, H, Y;
};

// [H,X]=2X, [H,Y]=-2Y, [X,Y]=H, all exact.
bool verify_sl2(const LieAlgebra& L, const Sl2Triple& t);

// A semisimple element presented both as an algebra element and in the
// Bourbaki chart, together with Dynkin's long/short coordinate convention
// H = sum a_beta beta^vee + sum a_gamma gamma^vee / r over the simple roots.
struct DefiningVector {
  Element H;
  QVec bourbaki;        // realization coordinates
  QVec dynkin_coords;   // one coefficient per simple root as above
};

DefiningVector defining_vector_from_realization(const LieAlgebra& L, const QVec& v);
DefiningVector defining_vector_from_dynkin_coords(const LieAlgebra& L, const QVec& coords);

// Diagram labels alpha_i(H) after dominance reduction.
struct WeightedDiagram {
  std::vector<long> labels;
  QVec dominant_h;  // realization coordinates of the dominant representative

  bool operator==(const WeightedDiagram&) const = default;
};

WeightedDiagram weighted_diagram(const LieAlgebra& L, const DefiningVector& dv);

// (H,H)_g / 2.
Rat sl2_index(const LieAlgebra& L, const DefiningVector& dv);

// Randomized Jacobson-Morozov search: X is drawn in the 2-eigenspace of
// ad H with small seeded integer coefficients and [X,Y]=H is solved for Y in
// the -2-eigenspace, retrying up to kSl2Retries times. A returned triple is
// exact and verified; absence is probabilistic, never a proof.
constexpr int kSl2Retries = 32;

std::optional<Sl2Triple> build_sl2(const LieAlgebra& L, const Element& H,
                                   std::uint64_t seed = kDefaultSeed);

// Same search restricted to a bracket-closed subspace containing H.
std::optional<Sl2Triple> build_sl2_in(const LieAlgebra& L, const Element& H,
                                      const Subspace& domain,
                                      std::uint64_t seed = kDefaultSeed);

struct Sl2Class {
  WeightedDiagram diagram;
  DefiningVector defining_vector;
  Rat index;
  std::string prime_label;  // fixture naming; empty when not applicable
  Sl2Triple triple;
};

// All conjugacy classes of three-dimensional simple subalgebras found by
// lifting every {0,1,2} labeling of the simple roots, in (index, defining
// vector) order. Labels outside {0,1,2} are rejected as a tested working
// assumption: any constructed triple violating it would trip the assertion
// in weighted_diagram consumers rather than be silently dropped.
std::vector<Sl2Class> enumerate_sl2_classes(const LieAlgebra& L,
                                            std::uint64_t seed = kDefaultSeed);

}  // namespace dualpair

#endif
