#ifndef DUALPAIR_PAIRS_HPP
#define DUALPAIR_PAIRS_HPP

#include "dualpair/admissible.hpp"
#include "dualpair/fixtures.hpp"
#include "dualpair/regular.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dualpair {

// ---- fixture aggregate --------------------------------------------------

struct CatalogNode {
  SemisimpleTypeInfo type;
  std::string raw;  // type string with primes, as printed
  // Optional construction hints per atom; empty when the figure gives none.
  struct Atom {
    SemisimpleTypeInfo type;
    std::string raw;
    std::string build_kind;      // "", "admissible", "centralize-admissible"
    std::vector<int> circles;    // 1-based
  };
  std::vector<Atom> atoms;
};

struct Catalog {
  std::map<std::string, std::vector<CatalogNode>> nodes;            // by type string
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> edges;

  bool contains(const std::string& ambient_type, const SemisimpleTypeInfo& t) const;
};

struct PairRowFixture {
  std::string u_key;
  std::string a, b;  // type strings with primes
  std::string display;
  std::string tag;
};

struct Fixtures {
  std::map<std::string, std::vector<Sl2FixtureRow>> appendix_a;
  AppendixB appendix_b;
  Catalog catalog;
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> max_reg_pairs;
  std::vector<struct SIrrFixtureRow> s_irreducible;
  std::map<std::string, std::vector<PairRowFixture>> classical_pairs;
  std::map<std::string, std::vector<struct PlannedRowFixture>> exceptional_pairs;
  std::vector<struct PlannedRowFixture> refutations;
};

struct SIrrFixtureRow {
  std::string g, a, b;
  std::vector<int> circles;
  bool maximal = false;
};

// ---- construction plans -------------------------------------------------

struct PiecePlan {
  std::string factor_type;  // u factor to work in; "" = the ambient algebra
  int factor_ordinal = 0;
  enum class How { Full, Sl2, Admissible, CentralizeSl2, CentralizeAdmissible };
  How how = How::Full;
  long sl2_index = 0;
  std::string sl2_prime;
  std::vector<int> circles;  // 1-based positions in the factor's Bourbaki order
};

struct BuildPlan {
  std::string u_key;  // "" means pieces act on the ambient simple roots
  std::vector<PiecePlan> pieces;
};

struct PlannedRowFixture {
  std::string g;
  std::string u_key;
  std::string a, b;  // b doubles as expected_b for refutation rows
  std::string display;
  BuildPlan plan;
};

Fixtures load_fixtures(const std::string& dir);

// Consistency of the catalog's index data with multiplicativity along
// edges: every child factor's index must be divisible by the index of some
// parent factor it can sit in (counted with multiplicity).
bool catalog_multiplicativity_consistent(const Catalog& c, std::string* detail = nullptr);

// ---- building and verifying ---------------------------------------------

// Materialize a plan. Throws std::runtime_error with the blocking recipe
// when a piece cannot be built.
SubalgebraHandle build_plan(const LieAlgebra& L, const Fixtures& fx, const BuildPlan& plan,
                            std::uint64_t seed = kDefaultSeed);

struct DualPairRecord {
  std::string ambient;
  std::string provenance;  // max-regular | admissible | S-in-regular | family:<tag>
  std::string u_key;
  std::vector<int> circles;        // admissible provenance when applicable
  std::string a_type, b_type;      // computed; primes only when resolved
  std::string expected_b;          // from the candidate, may be empty
  std::string status;              // confirmed | refuted | undecided
  std::string witness;
  long a_dim = 0, b_dim = 0;
  std::string display;             // printed form once matched to a fixture row

  std::string pair_key() const;    // unordered, prime-insensitive dedup key
};

// b := z(a); confirmed iff identify(b) works, z(b) = a exactly, and the
// expected type (when given) matches; refuted on a strict containment
// witness against the expectation; undecided otherwise.
DualPairRecord verify_pair(const LieAlgebra& L, const SubalgebraHandle& a,
                           const std::string& expected_b = "",
                           std::uint64_t seed = kDefaultSeed);

// Dual pairs from two-part splits of every prime-marked maximal regular
// subalgebra of maximal rank.
std::vector<DualPairRecord> pairs_from_maximal_regular(const LieAlgebra& L, const Fixtures& fx);

// Admissible sweep + S-subalgebra catalog membership + double-centralizer
// verification; exceptional ambient types.
std::vector<DualPairRecord> s_irreducible_pairs(const LieAlgebra& L, const Fixtures& fx,
                                                std::uint64_t seed = kDefaultSeed,
                                                int jobs = 1);

// The three-step candidate pipeline through maximal-rank regular
// subalgebras; emits undecided records with the blocking recipe named when
// an a-side is not constructible.
std::vector<DualPairRecord> non_s_irreducible_pairs(const LieAlgebra& L, const Fixtures& fx,
                                                    std::uint64_t seed = kDefaultSeed,
                                                    int jobs = 1);

// The classical parameter families instantiated at rank n (complete for
// the admissible portions; partial-list semantics as printed).
struct FamilyInstance {
  char family;
  int n;
  std::string tag;           // "S-irr(a)", "i", "ii", "2a", ...
  bool s_irreducible;
  std::vector<int> circles;  // on the ambient diagram, 1-based
  std::string a_shape, b_shape;  // expected type shapes without indices
};
std::vector<FamilyInstance> classical_families(char family, int n);

std::vector<DualPairRecord> classical_pair_families(const LieAlgebra& L, const Fixtures& fx,
                                                    std::uint64_t seed = kDefaultSeed);

// Everything for one ambient type, merged and deduplicated.
std::vector<DualPairRecord> classify_type(const LieAlgebra& L, const Fixtures& fx,
                                          std::uint64_t seed = kDefaultSeed, int jobs = 1);

// Prime resolution against fixture rows: attach display strings and primed
// type names to computed records by matching construction provenance.
void attach_fixture_names(std::vector<DualPairRecord>& records, const Fixtures& fx);

}  // namespace dualpair

#endif
