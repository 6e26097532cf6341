#ifndef DUALPAIR_CHEVALLEY_HPP
#define DUALPAIR_CHEVALLEY_HPP

#include "dualpair/rootsystem.hpp"

#include <iosfwd>
#include <vector>

namespace dualpair {

// Coordinate vector over a LieAlgebra basis (length = dim).
using Element = QVec;

// A simple Lie algebra over Q in a Chevalley basis: h_1..h_n are the simple
// coroots, followed by one root vector e_a per root in the canonical
// (lexicographic) order of the root system. Structure-constant signs are
// fixed by the extraspecial-pair scheme, so a given build is reproducible
// down to the sign of every N_{a,b}.
struct LieAlgebra {
  const RootSystem* rs = nullptr;
  std::size_t dim = 0;
  int rank = 0;

  // Sparse bracket table over basis pairs, full (both orders) for cheap reads.
  std::vector<std::vector<std::pair<std::size_t, Rat>>> table;

  std::size_t root_basis_index(std::size_t root_idx) const { return rank + root_idx; }

  const std::vector<std::pair<std::size_t, Rat>>& basis_bracket(std::size_t i,
                                                                std::size_t j) const {
    return table[i * dim + j];
  }

  Element zero() const { return Element(dim, Rat(0)); }
  Element basis_element(std::size_t i) const;
  Element root_vector(const QVec& root) const;
  // Cartan element with given simple-coroot coefficients.
  Element cartan_element(const QVec& coroot_coeffs) const;

  // Cartan realization vector of the Cartan part of x (ambient coords).
  QVec realize_cartan(const Element& x) const;
  // Inverse: realization vector in the coroot span -> Element.
  Element cartan_from_realization(const QVec& v) const;

  // alpha(h) for the Cartan part of h.
  Rat root_value(const QVec& root, const Element& h) const;

  // Normalized invariant form extended to the whole algebra.
  Rat form(const Element& x, const Element& y) const;
};

const LieAlgebra& build_chevalley(const RootSystem& rs);  // cached, immutable

Element bracket(const LieAlgebra& L, const Element& x, const Element& y);

// Matrix of ad(x) acting on column coordinate vectors.
QMatrix ad_matrix(const LieAlgebra& L, const Element& x);

// One line per nonzero root-root structure constant, deterministic order.
void dump_structure_constants(const LieAlgebra& L, std::ostream& os);

}  // namespace dualpair

#endif
