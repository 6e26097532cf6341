#ifndef DUALPAIR_CENTRALIZER_HPP
#define DUALPAIR_CENTRALIZER_HPP

#include "dualpair/characters.hpp"
#include "dualpair/semisimple_type.hpp"
#include "dualpair/subspace.hpp"
#include "dualpair/rng.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dualpair {

enum class Recipe {
  RegularSubsystem,
  Sl2FromH,
  Admissible,
  AdmissibleInRegular,
  DirectSum,
  RawSpan,
};

std::string recipe_name(Recipe r);

// A concrete subalgebra of a fixed Chevalley algebra: its span, a
// generating set (centralizing the generators centralizes the span), the
// construction it came from, and the identification when computed.
struct SubalgebraHandle {
  const LieAlgebra* L = nullptr;
  Subspace span;
  std::vector<Element> generators;
  Recipe recipe = Recipe::RawSpan;
  std::optional<SemisimpleTypeInfo> identified;
  std::vector<Element> cartan;  // split Cartan basis when known

  std::size_t dim() const { return span.dim(); }
};

SubalgebraHandle handle_from_span(const LieAlgebra& L, Subspace span, Recipe recipe);

// z_g(a): everything commuting with a's generators. Exact; bracket-closed
// by construction.
SubalgebraHandle centralize(const LieAlgebra& L, const SubalgebraHandle& a);

// Type identification of a bracket-closed subspace.
struct Identification {
  SemisimpleTypeInfo type;
  std::vector<Element> cartan;       // split Cartan of s
  AbstractRootData root_data;        // roots of s on that Cartan
  // Per positive root: an sl2 triple (x, h, y) with h in the Cartan span.
  struct RootTriple {
    QVec root;
    Element x, h, y;
  };
  std::vector<RootTriple> triples;
  // Indices into root_data.simple_roots per factor, factor order matching
  // type.factors after canonicalization is NOT guaranteed; factor_types
  // lists them in diagram-component order.
  std::vector<SimpleFactor> factor_types;
};

struct IdentifyFailure {
  std::string reason;
};

// Either an identification or a diagnostic (nonzero center, degenerate
// form, non-split Cartan found, ...).
std::optional<Identification> identify(const LieAlgebra& L, const Subspace& s,
                                       std::string* failure_reason = nullptr,
                                       std::uint64_t seed = kDefaultSeed);

// Convenience: identify and record on the handle.
bool identify_handle(const LieAlgebra& L, SubalgebraHandle& h,
                     std::string* failure_reason = nullptr);

// Branching of the adjoint representation: decompose g as an a-module by
// weight bookkeeping over a's split Cartan; the trivial multiplicity equals
// dim z_g(a) by the fixed-vector argument, which the caller cross-checks.
struct BranchingDecomposition {
  std::vector<PeeledSummand> summands;  // nonzero highest weights
  long trivial_multiplicity = 0;
  Rat chi_dim;  // dim g - dim a
};

BranchingDecomposition branch_adjoint(const LieAlgebra& L, const SubalgebraHandle& a);

// Weights of the ambient algebra under a commuting family of split toral
// elements; exact eigenvalue extraction.
std::map<QVec, Subspace, cmp_qvec> joint_weight_spaces(const LieAlgebra& L,
                                                       const std::vector<Element>& torus,
                                                       const Subspace& space);

}  // namespace dualpair

#endif
