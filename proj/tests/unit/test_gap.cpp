#include "doctest.h"
#include "essentia/errors.hpp"
#include "essentia/gap.hpp"
#include "essentia/generators.hpp"
#include "support/fixtures.hpp"

using namespace essentia;

TEST_CASE("star and matching+apex at m = 10 give 9/5") {
  auto star = measure_gap(gen_star_multicut(10), 0);
  CHECK(star.fractional == 5);
  CHECK(star.integral == 9);
  CHECK(*star.ratio == Rational(9, 5));
  auto apex = measure_gap(gen_matching_apex(10), 0);
  CHECK(apex.fractional == 5);
  CHECK(apex.integral == 9);
  CHECK(*apex.ratio == Rational(9, 5));
  CHECK(*apex.pinned == 0);
}

TEST_CASE("no obstacles gives no ratio") {
  auto r = measure_gap(Instance(Problem::VertexCover, fixture::undirected(3, {})), std::nullopt);
  CHECK(r.fractional == 0);
  CHECK(r.integral == 0);
  CHECK_FALSE(r.ratio);
}

TEST_CASE("standard LP on a triangle") {
  auto r = measure_gap(fixture::triangle_vc(), std::nullopt);
  CHECK(r.fractional == Rational(3, 2));
  CHECK(r.integral == 2);
  CHECK(*r.ratio == Rational(4, 3));
}

TEST_CASE("caps and bad pins") {
  GapOptions small;
  small.size_cap = 4;
  CHECK_THROWS_AS(measure_gap(gen_star_multicut(5), 0, small), ResourceExceeded);
  CHECK_THROWS_AS(measure_gap(gen_star_multicut(3), 9), InvalidInput);
}
