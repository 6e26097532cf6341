#ifndef DUALPAIR_SUBSPACE_HPP
#define DUALPAIR_SUBSPACE_HPP

#include "dualpair/chevalley.hpp"

#include <functional>
#include <optional>

namespace dualpair {

// Subspace of a LieAlgebra, stored as the canonical reduced row echelon
// basis, so equality of subspaces is equality of matrices.
struct Subspace {
  const LieAlgebra* algebra = nullptr;
  QMatrix basis;  // rows = basis vectors, cols = algebra->dim

  Subspace() = default;
  Subspace(const LieAlgebra& L, QMatrix rows) : algebra(&L), basis(std::move(rows)) {
    rref(basis);
  }

  static Subspace span_of(const LieAlgebra& L, const std::vector<Element>& vecs);
  static Subspace zero(const LieAlgebra& L) { return Subspace(L, QMatrix(0, L.dim)); }
  static Subspace full(const LieAlgebra& L) { return Subspace(L, identity(L.dim)); }

  std::size_t dim() const { return basis.rows; }
  Element basis_vector(std::size_t i) const { return basis.row(i); }
  std::vector<Element> basis_vectors() const;

  bool contains(const Element& v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& o) const { return basis == o.basis; }
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);  // Zassenhaus

// Smallest bracket-closed subspace containing the generators.
Subspace span_closure(const LieAlgebra& L, const std::vector<Element>& generators);

bool is_bracket_closed(const LieAlgebra& L, const Subspace& s);

// {x in domain : f(x) = 0} for a linear map f given by evaluation.
Subspace solve_in_subspace(const LieAlgebra& L, const std::function<Element(const Element&)>& f,
                           const Subspace& domain);

// Affine version: {x in domain : f(x) = rhs}. Reports infeasibility
// explicitly via nullopt; otherwise one solution plus the homogeneous
// kernel within the domain.
struct AffineSolution {
  Element particular;
  Subspace kernel;
};
std::optional<AffineSolution> solve_affine_in_subspace(
    const LieAlgebra& L, const std::function<Element(const Element&)>& f, const Element& rhs,
    const Subspace& domain);

// {x in domain : [x, t] = 0 for every t in targets}.
Subspace centralizer_in(const LieAlgebra& L, const Subspace& domain,
                        const std::vector<Element>& targets);

// Eigenspace levels of ad H with eigenvalues 2p; H must lie in the Cartan
// and all root values of H must be even integers. Levels are returned in
// increasing order of p with level 0 containing the Cartan.
struct GradingLevel {
  long p;  // eigenvalue 2p
  Subspace space;
};
std::vector<GradingLevel> grading_by(const LieAlgebra& L, const Element& H);

// Eigenspace of ad H (H in the Cartan) with a given eigenvalue, as the span
// of the root vectors at that value (plus the Cartan at value 0).
Subspace cartan_eigenspace(const LieAlgebra& L, const Element& H, const Rat& value);

}  // namespace dualpair

#endif
