#include "doctest.h"
#include "essentia/simplex.hpp"

using namespace essentia;

TEST_CASE("single column") {
  PackingSimplex lp(2);
  const int col[] = {0, 1};
  lp.add_column(col);
  lp.optimize();
  CHECK(lp.objective() == 1);
  CHECK(lp.dual(0) + lp.dual(1) == 1);
  CHECK(lp.primal(0) == 1);
}

TEST_CASE("triangle edges give three halves") {
  PackingSimplex lp(3);
  const int a[] = {0, 1};
  const int b[] = {1, 2};
  const int c[] = {0, 2};
  lp.add_column(a);
  lp.add_column(b);
  lp.add_column(c);
  lp.optimize();
  CHECK(lp.objective() == Rational(3, 2));
  for (int r = 0; r < 3; ++r) CHECK(lp.dual(r) == Rational(1, 2));
}

TEST_CASE("warm start after adding columns keeps the value monotone") {
  PackingSimplex lp(4);
  const int a[] = {0, 1};
  lp.add_column(a);
  lp.optimize();
  CHECK(lp.objective() == 1);
  const int b[] = {2, 3};
  lp.add_column(b);
  lp.optimize();
  CHECK(lp.objective() == 2);
  const int c[] = {1, 2};
  lp.add_column(c);
  lp.optimize();
  CHECK(lp.objective() == 2);
  Rational dual_sum = 0;
  for (int r = 0; r < 4; ++r) dual_sum += lp.dual(r);
  CHECK(dual_sum == lp.objective());
}
