#include "dualpair/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dualpair {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

QVec qvec(std::initializer_list<long> xs) {
  QVec v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

QVec operator+(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec operator-(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec operator*(const Rat& c, const QVec& v) {
  QVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

bool is_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

std::string vec_str(const QVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].get_str();
  }
  os << ")";
  return os.str();
}

void QMatrix::append_row(const QVec& v) {
  if (rows == 0 && cols == 0) cols = v.size();
  a.insert(a.end(), v.begin(), v.end());
  ++rows;
}

QVec QMatrix::row(std::size_t i) const {
  return QVec(a.begin() + i * cols, a.begin() + (i + 1) * cols);
}

QMatrix identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QVec mat_vec(const QMatrix& m, const QVec& v) {
  QVec r(m.rows, Rat(0));
  for (std::size_t i = 0; i < m.rows; ++i) {
    Rat s = 0;
    for (std::size_t j = 0; j < m.cols; ++j) {
      const Rat& e = m.at(i, j);
      if (e != 0 && v[j] != 0) s += e * v[j];
    }
    r[i] = s;
  }
  return r;
}

QMatrix mat_mul(const QMatrix& m, const QMatrix& n) {
  QMatrix r(m.rows, n.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t k = 0; k < m.cols; ++k) {
      const Rat& e = m.at(i, k);
      if (e == 0) continue;
      for (std::size_t j = 0; j < n.cols; ++j) {
        const Rat& f = n.at(k, j);
        if (f != 0) r.at(i, j) += e * f;
      }
    }
  return r;
}

QMatrix transpose(const QMatrix& m) {
  QMatrix r(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

void rref(QMatrix& m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    Rat inv = 1 / m.at(r, c);
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      const Rat f = m.at(i, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < m.cols; ++j)
        if (m.at(r, j) != 0) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  m.a.resize(r * m.cols);
  m.rows = r;
}

std::size_t rank(QMatrix m) {
  rref(m);
  return m.rows;
}

QMatrix kernel(const QMatrix& m) {
  QMatrix e = m;
  rref(e);
  // Pivot columns of the echelon form; free columns parametrize the kernel.
  std::vector<long> pivot_of_col(e.cols, -1);
  for (std::size_t i = 0, c = 0; i < e.rows; ++i) {
    while (c < e.cols && e.at(i, c) == 0) ++c;
    if (c < e.cols) pivot_of_col[c] = static_cast<long>(i);
  }
  QMatrix k;
  k.cols = e.cols;
  for (std::size_t f = 0; f < e.cols; ++f) {
    if (pivot_of_col[f] >= 0) continue;
    QVec v(e.cols, Rat(0));
    v[f] = 1;
    for (std::size_t c = 0; c < e.cols; ++c)
      if (pivot_of_col[c] >= 0) v[c] = -e.at(static_cast<std::size_t>(pivot_of_col[c]), f);
    k.append_row(v);
  }
  rref(k);
  return k;
}

std::optional<QVec> solve(const QMatrix& m, const QVec& b) {
  QMatrix aug(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  rref(aug);
  QVec x(m.cols, Rat(0));
  for (std::size_t i = 0; i < aug.rows; ++i) {
    std::size_t c = 0;
    while (c <= m.cols && aug.at(i, c) == 0) ++c;
    if (c == m.cols) return std::nullopt;  // row (0..0 | nonzero): inconsistent
    if (c > m.cols) continue;
    x[c] = aug.at(i, m.cols);
  }
  return x;
}

}  // namespace dualpair
