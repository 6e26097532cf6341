#ifndef DUALPAIR_RATIONAL_HPP
#define DUALPAIR_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <vector>
#include <cstdint>

namespace dualpair {

// All arithmetic in this project is exact. Rat is an arbitrary-precision
// rational; there is no floating point anywhere downstream of this header.
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
  Rat q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline long to_long(const Rat& q) {
  // Caller guarantees integrality and range; both hold for every quantity
  // this project extracts (indices, labels, dimensions, eigenvalues).
  return mpz_get_si(q.get_num().get_mpz_t());
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& s);

using QVec = std::vector<Rat>;

QVec qvec(std::initializer_list<long> xs);
QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator*(const Rat& c, const QVec& v);
Rat dot(const QVec& a, const QVec& b);
bool is_zero(const QVec& v);
std::string vec_str(const QVec& v);

}  // namespace dualpair

#endif
