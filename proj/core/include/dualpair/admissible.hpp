#ifndef DUALPAIR_ADMISSIBLE_HPP
#define DUALPAIR_ADMISSIBLE_HPP

#include "dualpair/centralizer.hpp"
#include "dualpair/regular.hpp"
#include "dualpair/sl2.hpp"

namespace dualpair {

// Maximal connected subdiagram whose unique circled node is `circled`;
// components of overlapping supports are allowed and preserved.
struct CircledComponent {
  int circled = -1;        // index into the base
  std::vector<int> nodes;  // indices into the base, sorted
};

std::vector<CircledComponent> circled_components(const std::vector<QVec>& psi,
                                                 const std::vector<int>& circled);

// A circled couple (Psi, theta) over a base psi, which may be the simple
// roots of the ambient algebra or of a regular subsystem inside it.
struct AdmissibleCouple {
  const LieAlgebra* L = nullptr;
  std::vector<QVec> psi;
  std::vector<int> circled;  // Psi \ theta as indices into psi
  std::vector<CircledComponent> components;
  Element H_theta;
  std::vector<Element> component_H;
  Subspace h_theta;  // {H in the coroot span of psi : alpha(H)=0 on theta}
};

AdmissibleCouple make_couple(const LieAlgebra& L, const std::vector<QVec>& psi,
                             const std::vector<int>& circled);

struct AdmissibleVerdict {
  bool admissible = false;
  int failed_component = -1;  // probabilistic caveat: absence is not a proof
  std::vector<Sl2Triple> component_triples;
};

AdmissibleVerdict is_admissible(const AdmissibleCouple& c, std::uint64_t seed = kDefaultSeed);

struct AdmissibleSubalgebra {
  AdmissibleCouple couple;
  SubalgebraHandle handle;
  std::vector<Sl2Triple> triples;
  SemisimpleTypeInfo identified;
};

// Generates the subalgebra from the component triples, verifies the Cartan
// is h_theta, and identifies the type. Nullopt when the couple is not
// admissible (probabilistic caveat applies).
std::optional<AdmissibleSubalgebra> build_admissible(const AdmissibleCouple& c,
                                                     std::uint64_t seed = kDefaultSeed);

}  // namespace dualpair

#endif
