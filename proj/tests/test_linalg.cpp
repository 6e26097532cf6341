#include "doctest.h"
#include "dualpair/linalg.hpp"

using namespace dualpair;

TEST_CASE("rref canonical form and rank") {
  QMatrix m(3, 3);
  m.at(0, 0) = 2; m.at(0, 1) = 4; m.at(0, 2) = 6;
  m.at(1, 0) = 1; m.at(1, 1) = 2; m.at(1, 2) = 3;
  m.at(2, 0) = 0; m.at(2, 1) = 1; m.at(2, 2) = 1;
  rref(m);
  CHECK(m.rows == 2);
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == 0);
  CHECK(m.at(0, 2) == 1);
  CHECK(m.at(1, 1) == 1);
  CHECK(m.at(1, 2) == 1);

  // Same row space reached from a different spanning set gives the same matrix.
  QMatrix n(2, 3);
  n.at(0, 0) = 1; n.at(0, 1) = 4; n.at(0, 2) = 5;
  n.at(1, 0) = 1; n.at(1, 1) = 3; n.at(1, 2) = 4;
  rref(n);
  CHECK(m == n);
}

TEST_CASE("kernel and solve") {
  QMatrix m(2, 4);
  m.at(0, 0) = 1; m.at(0, 1) = 1; m.at(0, 2) = 0; m.at(0, 3) = 0;
  m.at(1, 0) = 0; m.at(1, 1) = 1; m.at(1, 2) = 1; m.at(1, 3) = 0;
  QMatrix k = kernel(m);
  CHECK(k.rows == 2);
  for (std::size_t i = 0; i < k.rows; ++i) CHECK(is_zero(mat_vec(m, k.row(i))));

  QVec b = qvec({3, 1});
  auto x = solve(m, b);
  REQUIRE(x.has_value());
  CHECK(mat_vec(m, *x) == b);

  QMatrix bad(2, 1);
  bad.at(0, 0) = 1;
  bad.at(1, 0) = 1;
  CHECK(!solve(bad, qvec({1, 2})).has_value());
}

TEST_CASE("rational parsing") {
  CHECK(parse_rat("3/6") == rat(1, 2));
  CHECK(parse_rat("-2") == rat(-2));
  CHECK_THROWS(parse_rat("x"));
}
