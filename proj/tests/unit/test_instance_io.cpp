#include <string>

#include "doctest.h"
#include "essentia/errors.hpp"
#include "essentia/generators.hpp"
#include "essentia/instance_io.hpp"
#include "support/fixtures.hpp"

using namespace essentia;

namespace {

std::string error_of(const std::string& text) {
  try {
    instance_from_json(text);
  } catch (const InvalidInput& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("round trip for every problem") {
  for (Problem p : kAllProblems) {
    Instance inst = gen_random({p, 8}, 2);
    CHECK(instance_from_json(instance_to_json(inst)) == inst);
  }
  auto gadget = gen_dfvs_gadget(fixture::triangle_dfvs(), 1);
  std::string text = instance_to_json(gadget.instance, gadget.labels);
  CHECK(text.find("\"Q_in\"") != std::string::npos);
  CHECK(instance_from_json(text) == gadget.instance);
}

TEST_CASE("short problem tags and default orientation") {
  Instance inst = instance_from_json(R"({"problem":"DFVS","n":2,"edges":[[0,1],[1,0]]})");
  CHECK(inst.problem() == Problem::DirectedFeedbackVertexSet);
  CHECK(inst.graph().directed());
}

TEST_CASE("errors point at the offending field") {
  CHECK(error_of(R"({"problem":"vertex-cover","n":3,"edges":[[0,1],[1,3]]})").rfind("edges[1][1]", 0) == 0);
  CHECK(error_of(R"({"problem":"vertex-multicut","n":3,"edges":[],"terminals":[[0,-1]]})").rfind("terminals[0][1]", 0) == 0);
  CHECK(error_of(R"({"problem":"vertex-cover","n":3,"edges":[[0]]})").rfind("edges[0]", 0) == 0);
  CHECK(error_of(R"({"problem":"nope","n":3,"edges":[]})").find("nope") != std::string::npos);
  CHECK(error_of(R"({"problem":"vertex-cover","n":3)").find("byte") != std::string::npos);
  CHECK(error_of(R"({"problem":"vertex-cover","edges":[]})").find("\"n\"") != std::string::npos);
  CHECK(error_of(R"({"problem":"vertex-cover","directed":true,"n":2,"edges":[]})") != "");
}

TEST_CASE("dimacs edge lists") {
  Instance inst = instance_from_dimacs("c comment\np edge 3 2\ne 1 2\ne 2 3\n", Problem::VertexCover);
  CHECK(inst.graph().arcs() == std::vector<Arc>{{0, 1}, {1, 2}});
  Instance dir = instance_from_dimacs("p edge 2 2\ne 1 2\ne 2 1\n", Problem::DirectedFeedbackVertexSet);
  CHECK(dir.graph().num_arcs() == 2);
  CHECK_THROWS_AS(instance_from_dimacs("p edge 2 1\ne 1 3\n", Problem::VertexCover), InvalidInput);
  CHECK_THROWS_AS(instance_from_dimacs("e 1 2\n", Problem::VertexCover), InvalidInput);
  CHECK_THROWS_AS(instance_from_dimacs("p edge 2 1\ne 1 2\n", Problem::VertexMulticut), InvalidInput);
}
