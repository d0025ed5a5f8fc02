#include <algorithm>
#include <random>

#include "doctest.h"
#include "essentia/errors.hpp"
#include "essentia/generators.hpp"
#include "essentia/obstacles.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace essentia;

namespace {

std::vector<Rational> random_weights(int n, std::mt19937_64& rng) {
  std::vector<Rational> w;
  for (int i = 0; i < n; ++i) w.push_back(make_rational(static_cast<long>(rng() % 4), 3));
  return w;
}

Rational mask_weight(oracle::Mask m, const std::vector<Rational>& w) {
  Rational total = 0;
  for (int u : oracle::from_mask(m)) total += w[u];
  return total;
}

}  // namespace

TEST_CASE("is_solution on small hand-built cases") {
  Instance star = gen_star_multicut(5);
  const int centre[] = {0};
  CHECK(is_solution(star, centre));
  CHECK_FALSE(is_solution(star, std::vector<int>{1, 2, 3}));
  CHECK(is_solution(star, std::vector<int>{1, 2, 3, 4}));
  CHECK_FALSE(is_solution(fixture::p4_cograph(), std::vector<int>{}));
  for (Problem p : kAllProblems) {
    Instance inst = gen_random({p, 7}, 3);
    std::vector<int> all{0, 1, 2, 3, 4, 5, 6};
    CHECK(is_solution(inst, all));
  }
}

TEST_CASE("is_solution agrees with obstacle enumeration and is monotone") {
  std::mt19937_64 rng(9);
  for (Problem p : kAllProblems) {
    for (int trial = 0; trial < 40; ++trial) {
      Instance inst = gen_random({p, 7}, 100 + trial);
      for (int sample = 0; sample < 10; ++sample) {
        oracle::Mask x = static_cast<oracle::Mask>(rng() & 0x7f);
        const bool got = is_solution(inst, oracle::from_mask(x));
        CHECK(got == oracle::hits_all(inst, x));
        if (got) CHECK(is_solution(inst, oracle::from_mask(x | static_cast<oracle::Mask>(rng() & 0x7f))));
      }
    }
  }
}

TEST_CASE("oracle returns a zero-weight path on the zero star") {
  Instance star = gen_star_multicut(4);
  auto o = find_violated_obstacle(star, VertexWeights(5));
  REQUIRE(o);
  CHECK(o->kind == ObstacleKind::TerminalPath);
  CHECK(o->vertices.size() == 3);
  CHECK(o->vertices[1] == 0);
  CHECK(is_obstacle(star, *o));
}

TEST_CASE("matching+apex with apex neighbours at one half has no violated P4") {
  const int m = 5;
  Instance inst = gen_matching_apex(m);
  VertexWeights w(2 * m + 1);
  for (int i = 1; i <= m; ++i) w.set(i, Rational(1, 2));
  CHECK_FALSE(find_violated_obstacle(inst, w, 0));
  w.set(3, 0);
  auto o = find_violated_obstacle(inst, w, 0);
  REQUIRE(o);
  CHECK(o->kind == ObstacleKind::InducedP4);
  CHECK(o->weight(w) < 1);
}

TEST_CASE("pinned vertex must have weight zero") {
  Instance inst = fixture::triangle_vc();
  VertexWeights w(3);
  w.set(1, Rational(1, 2));
  CHECK_THROWS_AS(find_violated_obstacle(inst, w, 1), PreconditionViolated);
}

TEST_CASE("oracle finds a minimum-weight obstacle exactly when one is violated") {
  std::mt19937_64 rng(21);
  for (Problem p : kAllProblems) {
    for (int trial = 0; trial < 60; ++trial) {
      Instance inst = gen_random({p, 7}, 300 + trial);
      auto values = random_weights(7, rng);
      VertexWeights w(values);
      auto all = oracle::all_obstacles(inst);
      std::optional<Rational> lightest;
      for (auto m : all) {
        Rational x = mask_weight(m, values);
        if (!lightest || x < *lightest) lightest = x;
      }
      auto o = find_violated_obstacle(inst, w);
      if (!lightest || *lightest >= 1) {
        CHECK_FALSE(o);
        continue;
      }
      REQUIRE(o);
      CHECK(is_obstacle(inst, *o));
      CHECK(o->weight(w) == *lightest);
    }
  }
}

TEST_CASE("threshold controls what counts as violated") {
  Instance inst = fixture::triangle_vc();
  VertexWeights w(std::vector<Rational>(3, Rational(1, 2)));
  CHECK_FALSE(find_violated_obstacle(inst, w));
  CHECK(find_violated_obstacle(inst, w, std::nullopt, Rational(3, 2)));
}

TEST_CASE("minimal obstacle enumeration on small cases") {
  auto cyc = enumerate_obstacles_minimal(fixture::triangle_dfvs());
  REQUIRE(cyc.size() == 1);
  CHECK(cyc[0].vertex_set() == VertexSet{0, 1, 2});

  auto p4s = enumerate_obstacles_minimal(fixture::p5_cograph());
  REQUIRE(p4s.size() == 2);
  CHECK(p4s[0].vertex_set() == VertexSet{0, 1, 2, 3});
  CHECK(p4s[1].vertex_set() == VertexSet{1, 2, 3, 4});
}

TEST_CASE("minimal obstacle enumeration matches brute force") {
  for (Problem p : kAllProblems) {
    for (int trial = 0; trial < 30; ++trial) {
      Instance inst = gen_random({p, 7}, 700 + trial);
      auto got = enumerate_obstacles_minimal(inst);
      std::vector<oracle::Mask> got_masks;
      for (const auto& o : got) {
        CHECK(is_obstacle(inst, o));
        got_masks.push_back(oracle::to_mask(o.vertex_set()));
      }
      for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1].vertices.size() <= got[i].vertices.size());
      auto want = oracle::minimal_obstacles(inst);
      std::sort(got_masks.begin(), got_masks.end());
      std::sort(want.begin(), want.end());
      CHECK(got_masks == want);
    }
  }
}

TEST_CASE("induced P4 listing") {
  auto p4s = induced_p4s(fixture::p5_cograph().graph());
  REQUIRE(p4s.size() == 2);
  for (const auto& o : p4s) CHECK(o.vertices.front() < o.vertices.back());
  std::vector<char> removed{0, 0, 1, 0, 0};
  CHECK(induced_p4s(fixture::p5_cograph().graph(), removed).empty());
  for (int seed = 0; seed < 30; ++seed) {
    Instance inst = gen_random({Problem::CographDeletion, 8, Rational(1, 2)}, seed);
    CHECK(induced_p4s(inst.graph()).size() == oracle::induced_p4_masks(inst.graph()).size());
  }
}

TEST_CASE("branching obstacle respects removed vertices") {
  Instance inst = fixture::p5_cograph();
  std::vector<char> removed{1, 0, 0, 0, 0};
  auto o = min_branching_obstacle(inst, removed, {});
  REQUIRE(o);
  CHECK(o->vertex_set() == VertexSet{1, 2, 3, 4});
  removed[2] = 1;
  CHECK_FALSE(min_branching_obstacle(inst, removed, {}));
}
