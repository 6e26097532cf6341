#ifndef DUALPAIR_FIXTURES_HPP
#define DUALPAIR_FIXTURES_HPP

#include "dualpair/rootsystem.hpp"

#include <map>
#include <string>
#include <vector>

namespace dualpair {

// Versioned golden data mirroring the printed classification tables.
// Everything in data/fixtures is an oracle for tests and the check-fixtures
// verb; no computation path reads a fixture to produce its answer.
std::string default_fixture_dir();

struct Sl2FixtureRow {
  long index = 0;
  std::string prime;
  std::vector<long> dv;       // printed coordinates
  std::vector<long> diagram;  // simple-root labels
};

// Keyed by type string ("B4", ...). Printed defining vectors for A_n carry
// n coordinates with the last one implied; realize_printed_dv restores the
// full chart vector.
std::map<std::string, std::vector<Sl2FixtureRow>> load_appendix_a(const std::string& dir);

QVec realize_printed_dv(const RootSystem& rs, const std::vector<long>& printed);

// Appendix B: Cartan embeddings of rank-2/3 subalgebras with the printed
// index and the restriction of the target's standard representation.
struct EmbeddingFixtureRow {
  std::string source;  // "A2", "B2", "G2", "A3", "B3", "C3"
  std::string target;
  long index = 0;
  std::string prime;
  std::vector<std::pair<std::string, long>> summands;  // (irrep label, multiplicity)
  QMatrix map;              // target ambient x source chart vars
  QMatrix map2;             // optional second chart (C2 / D3 vars); empty if absent
};

struct IrrepLabel {
  QVec highest_weight;  // source realization coordinates
  long dim = 0;
};

struct AppendixB {
  // label tables per source family
  std::map<std::string, std::map<std::string, IrrepLabel>> irreps;
  std::vector<EmbeddingFixtureRow> rows;
};

AppendixB load_appendix_b(const std::string& dir);

}  // namespace dualpair

#endif
