#include "doctest.h"
#include "essentia/errors.hpp"
#include "essentia/exact_solver.hpp"
#include "essentia/generators.hpp"
#include "essentia/lp.hpp"
#include "essentia/obstacles.hpp"
#include "essentia/rounding.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace essentia;

namespace {

FractionalSolution pinned_lp(const Instance& inst, int v) {
  LpProblem lp{inst, v, {}};
  return solve(lp);
}

FractionalSolution from_values(std::vector<Rational> values) {
  VertexWeights w(std::move(values));
  return {w, w.total()};
}

}  // namespace

TEST_CASE("star multicut: D is every leaf and the cut takes every leaf") {
  const int m = 5;
  Instance star = gen_star_multicut(m);
  std::vector<Rational> values(m + 1, Rational(1, 2));
  values[0] = 0;
  auto cert = round_multicut(star, 0, from_values(values));
  REQUIRE(cert.witness("D"));
  CHECK(*cert.witness("D") == VertexSet{1, 2, 3, 4, 5});
  CHECK(cert.integral_set.size() == m);
  CHECK(oracle::min_separator(star.graph(), {0}, {1, 2, 3, 4, 5}, 1) == m);
  CHECK(check_certificate(star, cert).empty());
  CHECK(Rational(static_cast<long>(cert.integral_set.size())) == 2 * cert.fractional_value);
}

TEST_CASE("integral input to the multicut rounding stays integral") {
  // 1 - 2 - 0 - 3, terminals (1, 3); x puts 1 on vertex 2.
  Instance inst(Problem::VertexMulticut, fixture::undirected(4, {{1, 2}, {2, 0}, {0, 3}}), {{1, 3}});
  auto cert = round_multicut(inst, 0, from_values({0, 0, 1, 0}));
  CHECK(cert.integral_set.size() == 1);
  CHECK(check_certificate(inst, cert).empty());
}

TEST_CASE("multicut rounding checks its preconditions") {
  Instance star = gen_star_multicut(3);
  CHECK_THROWS_AS(round_multicut(star, 1, from_values({1, 0, 1, 1})), PreconditionViolated);
  CHECK_THROWS_AS(round_multicut(star, 0, from_values({0, 0, 0, 0})), PreconditionViolated);
}

TEST_CASE("directed star") {
  // leaves 1,2 -> 0 -> leaves 3,4, pairs (in, out).
  Instance inst(Problem::DirectedVertexMulticut,
                fixture::directed(5, {{1, 0}, {2, 0}, {0, 3}, {0, 4}}),
                {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  auto cert = round_directed_multicut(inst, 0, from_values({0, Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
  CHECK(check_certificate(inst, cert).empty());
  CHECK(Rational(static_cast<long>(cert.integral_set.size())) <= 4 * cert.fractional_value);
  for (auto [s, t] : inst.terminals())
    CHECK((contains(*cert.witness("S"), s) || contains(*cert.witness("T"), t)));
}

TEST_CASE("integral directed input") {
  Instance inst(Problem::DirectedVertexMulticut,
                fixture::directed(5, {{1, 2}, {2, 0}, {0, 3}, {3, 4}}), {{1, 4}});
  auto cert = round_directed_multicut(inst, 0, from_values({0, 0, 1, 0, 0}));
  CHECK(check_certificate(inst, cert).empty());
  CHECK(cert.integral_set.size() <= 4);
}

TEST_CASE("cograph rounding on matching+apex m = 4") {
  Instance inst = gen_matching_apex(4);
  std::vector<Rational> values(9, Rational(0));
  for (int i = 1; i <= 4; ++i) values[i] = Rational(1, 2);
  auto cert = round_cograph(inst.graph(), 0, from_values(values));
  CHECK(cert.integral_set.size() == 4);
  CHECK(is_solution(inst, cert.integral_set));
  CHECK(check_certificate(inst, cert).empty());
  CHECK(opt_value(remove_vertices(inst, std::vector<int>{}).instance) == 1);
  SolveBudget forbid_apex;
  forbid_apex.forbidden = {0};
  CHECK(*min_solution_size(inst, forbid_apex) == 3);
}

TEST_CASE("cograph rounding: integral input and empty case") {
  Instance inst = gen_matching_apex(3);
  std::vector<Rational> values(7, Rational(0));
  values[1] = values[2] = values[3] = 1;
  auto cert = round_cograph(inst.graph(), 0, from_values(values));
  CHECK(cert.integral_set == VertexSet{1, 2, 3});

  Graph co = gen_random_cograph(6, 3);
  auto empty = round_cograph(co, 0, from_values(std::vector<Rational>(6, Rational(0))));
  CHECK(empty.integral_set.empty());
}

TEST_CASE("cograph rounding rejects a P4 avoiding v") {
  CHECK_THROWS_AS(round_cograph(fixture::p5_cograph().graph(), 0,
                                from_values(std::vector<Rational>(5, Rational(1)))),
                  PreconditionViolated);
}

TEST_CASE("rounding on random singleton instances") {
  for (Problem p : {Problem::VertexMulticut, Problem::DirectedVertexMulticut, Problem::CographDeletion}) {
    for (int trial = 0; trial < 40; ++trial) {
      auto gen = gen_random_singleton({p, 7}, 60 + trial);
      auto x = pinned_lp(gen.instance, gen.pinned);
      RoundingCertificate cert;
      if (p == Problem::VertexMulticut)
        cert = round_multicut(gen.instance, gen.pinned, x);
      else if (p == Problem::DirectedVertexMulticut)
        cert = round_directed_multicut(gen.instance, gen.pinned, x);
      else
        cert = round_cograph(gen.instance.graph(), gen.pinned, x);
      CHECK(check_certificate(gen.instance, cert).empty());
      CHECK(oracle::hits_all(gen.instance, oracle::to_mask(cert.integral_set)));
      if (cert.core_weights_at_least_fifth) CHECK(*cert.core_weights_at_least_fifth);
      if (p == Problem::VertexMulticut)
        for (auto [s, t] : gen.instance.terminals())
          CHECK((contains(*cert.witness("D"), s) || contains(*cert.witness("D"), t)));
    }
  }
}

TEST_CASE("check_certificate flags tampering") {
  Instance star = gen_star_multicut(4);
  std::vector<Rational> values(5, Rational(1, 2));
  values[0] = 0;
  auto cert = round_multicut(star, 0, from_values(values));
  auto bad = cert;
  bad.integral_set = {0};
  CHECK_FALSE(check_certificate(star, bad).empty());
  bad = cert;
  bad.integral_set = {1};
  CHECK_FALSE(check_certificate(star, bad).empty());
  bad = cert;
  bad.fractional_value = Rational(1, 2);
  CHECK_FALSE(check_certificate(star, bad).empty());
}
