#ifndef DUALPAIR_LINALG_HPP
#define DUALPAIR_LINALG_HPP

#include "dualpair/rational.hpp"

#include <optional>
#include <vector>

namespace dualpair {

// Dense rational matrix, row-major. Sizes in this project stay modest
// (<= a few hundred columns); entries are small except transiently inside
// eliminations, which GMP absorbs.
struct QMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Rat> a;

  QMatrix() = default;
  QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  void append_row(const QVec& v);
  QVec row(std::size_t i) const;

  bool operator==(const QMatrix& o) const = default;
};

QMatrix identity(std::size_t n);
QVec mat_vec(const QMatrix& m, const QVec& v);
QMatrix mat_mul(const QMatrix& m, const QMatrix& n);
QMatrix transpose(const QMatrix& m);

// In-place reduced row echelon form with unit pivots and rows sorted by
// pivot column; zero rows are dropped. The result is the canonical
// representative of the row space, so row-space equality is operator==.
void rref(QMatrix& m);

std::size_t rank(QMatrix m);

// Basis of the right kernel {x : m x = 0}, returned in RREF canonical form.
QMatrix kernel(const QMatrix& m);

// One solution of m x = b, if any.
std::optional<QVec> solve(const QMatrix& m, const QVec& b);

}  // namespace dualpair

#endif
