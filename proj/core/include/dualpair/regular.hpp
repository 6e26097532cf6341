#ifndef DUALPAIR_REGULAR_HPP
#define DUALPAIR_REGULAR_HPP

#include "dualpair/semisimple_type.hpp"
#include "dualpair/subspace.hpp"

#include <map>
#include <string>
#include <vector>

namespace dualpair {

// Extended Dynkin diagram: the simple roots plus the lowest-root node, with
// the lowest-root node marked 1.
struct ExtendedDiagram {
  const RootSystem* base = nullptr;
  std::vector<QVec> nodes;       // simple roots then the lowest root
  std::vector<long> node_marks;  // marks..., 1
  int edge_multiplicity(int i, int j) const;
};

ExtendedDiagram extend(const RootSystem& rs);

// A root subsystem of an ambient root system, given by a base of ambient
// roots, with its computed type decomposition.
struct RootSubsystem {
  const RootSystem* ambient = nullptr;
  std::vector<QVec> simple_set;

  struct Factor {
    SimpleType type;                  // canonical (no C2/D3/rank-1 aliases)
    Rat index;                        // Dynkin index in the ambient
    std::vector<QVec> ordered_simples;  // Bourbaki order for this factor
  };
  std::vector<Factor> factors;

  SemisimpleTypeInfo type_info() const;
  std::string type_key() const;     // canonical dedup key (no primes)
  long rank() const { return static_cast<long>(simple_set.size()); }

  // All ambient roots lying in the Z-span of the base.
  std::vector<QVec> all_roots() const;
  // Highest root of one factor with respect to the factor's base.
  QVec factor_highest_root(std::size_t factor_idx) const;
};

RootSubsystem make_subsystem(const RootSystem& ambient, std::vector<QVec> simple_set);

// g(alpha_k) within one simple factor: replace the factor's base by
// (base + lowest root) minus the chosen node. Throws if the node is not in
// the subsystem or the operation would be the identity.
RootSubsystem elementary_operation(const RootSubsystem& sub, const QVec& node);

// Transitive closure of elementary operations from the full system,
// deduplicated by type key, excluding the full algebra, keyed
// deterministically.
std::map<std::string, RootSubsystem> enumerate_max_rank_regular(const RootSystem& rs);

// One elementary operation per prime-marked node of the extended diagram.
std::map<std::string, RootSubsystem> maximal_regular_max_rank(const RootSystem& rs);

// Dynkin index of one simple factor, computed from the normalized forms.
Rat factor_index(const RootSubsystem& sub, std::size_t factor_idx);

// Z/m_k Z grading by the alpha_k coefficient; level 0 = g(alpha_k) span.
std::vector<Subspace> mark_grading(const LieAlgebra& L, int k);  // 1-based k

// Standard Levi of a subset of simple roots: semisimple part and the rank
// of the center.
struct LeviDecomposition {
  RootSubsystem semisimple_part;
  long center_rank = 0;
};
LeviDecomposition standard_levi(const RootSystem& rs, const std::vector<int>& theta);

// Span and generators of a subsystem subalgebra inside a Chevalley algebra.
Subspace subsystem_span(const LieAlgebra& L, const RootSubsystem& sub);
std::vector<Element> subsystem_generators(const LieAlgebra& L, const RootSubsystem& sub);

}  // namespace dualpair

#endif
