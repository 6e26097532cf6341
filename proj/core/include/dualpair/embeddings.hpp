#ifndef DUALPAIR_EMBEDDINGS_HPP
#define DUALPAIR_EMBEDDINGS_HPP

#include "dualpair/rootsystem.hpp"

#include <string>
#include <vector>

namespace dualpair {

// Exact linear map between Cartan realizations, from a (possibly
// semisimple, coordinate-concatenated) source into a simple target.
struct CartanEmbedding {
  std::vector<const RootSystem*> source;  // factors; realization coords concatenated
  const RootSystem* target = nullptr;
  QMatrix map;  // target->ambient x sum(source ambients)
  std::string fixture_id;

  std::size_t source_ambient() const;
  QVec apply(const QVec& x) const { return mat_vec(map, x); }
};

// i = (phi x, phi x)_g / (x,x)_a, constant over the source Cartan; the
// constancy is asserted on three samples and a violation throws (it signals
// a map that is not form-proportional). Source must be simple.
Rat index_of(const CartanEmbedding& e);

CartanEmbedding compose(const CartanEmbedding& inner, const CartanEmbedding& outer);

bool index_multiplicativity_check(const CartanEmbedding& inner, const CartanEmbedding& outer);

// The worked diagonal embeddings sp_2 -> so_4m and sp_2m -> so_4m.
CartanEmbedding sp2_in_so4m(int m);
CartanEmbedding sp2m_in_so4m(int m);

CartanEmbedding identity_embedding(const RootSystem& rs);

// Embedding of a three-dimensional algebra determined by a defining vector.
CartanEmbedding sl2_embedding(const RootSystem& target, const QVec& defining_vector);

}  // namespace dualpair

#include "dualpair/fixtures.hpp"

namespace dualpair {

// Materialize a fixture row; second_chart picks the C2/D3 parametrization.
CartanEmbedding embedding_from_fixture(const EmbeddingFixtureRow& row, bool second_chart = false);

struct AppendixBVerification {
  bool index_ok = false;       // recomputed index equals the printed one
  bool dims_ok = false;        // restriction summand dims total the standard rep
  bool weyl_ok = false;        // each label's dim agrees with the Weyl formula
  bool charts_ok = false;      // both printed charts describe the same map
  Rat computed_index;
  std::string detail;

  bool all_ok() const { return index_ok && dims_ok && weyl_ok && charts_ok; }
};

AppendixBVerification verify_appendix_b(const AppendixB& data, const EmbeddingFixtureRow& row);

}  // namespace dualpair

#endif
