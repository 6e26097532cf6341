#ifndef DUALPAIR_CHARACTERS_HPP
#define DUALPAIR_CHARACTERS_HPP

#include "dualpair/rootsystem.hpp"

#include <map>
#include <vector>

namespace dualpair {

// Root datum of a semisimple algebra presented abstractly: roots and
// weights are coordinate vectors on a chosen Cartan basis, and the
// invariant form on the weight side is an explicit Gram matrix (the
// dual of the ambient form restricted to the Cartan).
struct AbstractRootData {
  std::vector<QVec> positive_roots;
  std::vector<QVec> simple_roots;
  QMatrix dual_form;  // (lambda, mu) = lambda^T dual_form mu

  Rat form(const QVec& a, const QVec& b) const;
  Rat coroot_pair(const QVec& lambda, const QVec& alpha) const;  // <lambda, alpha^vee>
  bool dominant(const QVec& lambda) const;
  QVec rho() const;

  // Weyl dimension formula on a dominant weight.
  Rat dim_of(const QVec& lambda) const;

  // Full character of the irreducible with highest weight lambda:
  // weight -> multiplicity, by saturation plus Freudenthal's recursion.
  std::map<QVec, long, cmp_qvec> character(const QVec& lambda) const;
};

// Greedy peel of a weight multiset into irreducible characters. Throws if
// a maximal weight fails to be dominant or a multiplicity goes negative
// (both signal an upstream identification bug).
struct PeeledSummand {
  QVec highest_weight;
  long multiplicity;
  Rat dim;
};
std::vector<PeeledSummand> peel_weights(const AbstractRootData& rd,
                                        std::map<QVec, long, cmp_qvec> weights);

}  // namespace dualpair

#endif
