#ifndef DUALPAIR_SEMISIMPLE_TYPE_HPP
#define DUALPAIR_SEMISIMPLE_TYPE_HPP

#include "dualpair/rootsystem.hpp"

#include <string>
#include <vector>

namespace dualpair {

// One simple factor of an identified subalgebra: its abstract type, its
// Dynkin index in the ambient algebra, and an optional prime label used
// only for table display (Dynkin's disambiguation ordinals).
struct SimpleFactor {
  SimpleType type;
  Rat index = 1;
  std::string prime;

  std::string str() const;
};

struct SemisimpleTypeInfo {
  std::vector<SimpleFactor> factors;  // kept canonically sorted

  long total_dim() const;
  long total_rank() const;
  void canonicalize();                // sort factors; normalize C2->B2, D2/D3->A/..

  // "A1^2+B2^1" with apostrophes appended to the index for primes; "0" for
  // the empty sum.
  std::string str() const;
  // Key that ignores prime labels; used for conjugacy-class style dedup.
  std::string key_no_primes() const;

  static SemisimpleTypeInfo parse(const std::string& s);

  bool operator==(const SemisimpleTypeInfo& o) const { return str() == o.str(); }
};

// Classification of a set of simple roots (vectors in some Euclidean chart)
// into simple components with a Bourbaki-compatible node order per factor.
struct DiagramComponent {
  SimpleType type;
  std::vector<int> order;  // indices into the input set, Bourbaki order
};

std::vector<DiagramComponent> classify_simple_roots(const std::vector<QVec>& simples);

// Same classification from abstract data: C(i,j) = <alpha_i, alpha_j^vee>.
// Relative root lengths are recovered by propagating C(i,j)/C(j,i) along
// edges, so only the Cartan matrix is needed.
std::vector<DiagramComponent> classify_from_cartan(const QMatrix& cartan);

// Rank-1/2/3 renamings used throughout the tables: B1/C1/D1 -> A1,
// C2 -> B2, D3 -> A3. D2 is reducible and never comes out of
// classify_simple_roots.
SimpleType canonical_low_rank(SimpleType t);

}  // namespace dualpair

#endif
