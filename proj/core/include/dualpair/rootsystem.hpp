#ifndef DUALPAIR_ROOTSYSTEM_HPP
#define DUALPAIR_ROOTSYSTEM_HPP

#include "dualpair/linalg.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dualpair {

// One of the nine families of irreducible root systems. D is accepted from
// rank 2 so the low-rank orthogonal tables can be driven uniformly; D2 and
// D3 are never produced by type identification (they print as 2A1 / A3).
struct SimpleType {
  char family = 'A';
  int rank = 0;

  SimpleType() = default;
  SimpleType(char f, int r);

  bool operator==(const SimpleType&) const = default;
  auto operator<=>(const SimpleType&) const = default;

  std::string str() const;          // "E7", "B4", ...
  static SimpleType parse(const std::string& s);

  int algebra_dim() const;          // rank + number of roots
  int root_count() const;
};

struct cmp_qvec {
  bool operator()(const QVec& a, const QVec& b) const {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      int c = cmp(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return a.size() < b.size();
  }
};

// An irreducible root system in its Bourbaki (Plate I-IX) realization,
// with exact rational coordinates. G2 follows the convention where
// alpha_1 = -2e1+e2+e3 is long and alpha_2 = e1-e2 is short.
struct RootSystem {
  SimpleType simple_type;
  std::size_t ambient = 0;           // dimension of the Euclidean realization
  std::vector<QVec> simple_roots;
  std::vector<QVec> simple_coroots;
  std::vector<QVec> all_roots;       // lexicographic on coordinates
  std::vector<QVec> positive_roots;  // lexicographic on coordinates
  QVec highest_root;
  QVec lowest_root;
  std::vector<long> marks;           // coefficients of the highest root
  QMatrix cartan_matrix;             // A_ij = <alpha_i, alpha_j^vee>
  Rat form_scale;                    // (x,y)_g = form_scale * <x,y>
  int length_ratio = 1;              // 1, 2 or 3
  std::vector<QVec> fundamental_coweights;

  std::map<QVec, std::size_t, cmp_qvec> root_index;       // into all_roots
  std::vector<QVec> simple_coeffs_of_root;                 // per all_roots

  int rank() const { return simple_type.rank; }

  bool is_root(const QVec& v) const { return root_index.count(v) != 0; }
  std::size_t index_of(const QVec& v) const { return root_index.at(v); }

  // alpha(H) for alpha in the dual realization and H in the Cartan; in the
  // Bourbaki charts this is the Euclidean pairing.
  Rat pair(const QVec& functional, const QVec& h) const { return dot(functional, h); }

  QVec coroot(const QVec& root) const;                    // 2a/<a,a>
  Rat norm2(const QVec& v) const { return dot(v, v); }
};

const RootSystem& build_root_system(SimpleType t);  // cached, immutable

// (x,y)_g = c <x,y> with c derived from the short-coroot normalization.
Rat normalized_form(const RootSystem& rs, const QVec& x, const QVec& y);

// Reflects v into the dominant chamber acting on the Cartan realization;
// returns the dominant vector and the simple-reflection word applied.
std::pair<QVec, std::vector<int>> make_dominant(const RootSystem& rs, QVec v);

// Same, acting on the weight side (reflection subtracts <v,a^vee> a).
std::pair<QVec, std::vector<int>> make_dominant_weight(const RootSystem& rs, QVec v);

// <lambda, alpha^vee> = 2<lambda,alpha>/<alpha,alpha>.
Rat coroot_pairing(const QVec& lambda, const QVec& alpha);

// Weyl dimension formula. lambda must be dominant integral for rs;
// throws std::invalid_argument otherwise.
Rat weyl_dim(const RootSystem& rs, const QVec& lambda);

// Product over the factors of a semisimple type; lambda is the
// concatenation of per-factor weights in realization coordinates.
Rat weyl_dim(const std::vector<const RootSystem*>& factors, const QVec& lambda);

QVec fundamental_coweight(const RootSystem& rs, int k);  // 1-based

}  // namespace dualpair

#endif
