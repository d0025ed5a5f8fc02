#pragma once

#include <vector>

#include "essentia/instance.hpp"

namespace fixture {

using essentia::Arc;
using essentia::Graph;
using essentia::Instance;
using essentia::Problem;

inline Graph undirected(int n, std::vector<Arc> edges) { return Graph(n, false, edges); }
inline Graph directed(int n, std::vector<Arc> arcs) { return Graph(n, true, arcs); }

inline Instance triangle_dfvs() {
  return Instance(Problem::DirectedFeedbackVertexSet, directed(3, {{0, 1}, {1, 2}, {2, 0}}));
}
inline Instance p4_cograph() {
  return Instance(Problem::CographDeletion, undirected(4, {{0, 1}, {1, 2}, {2, 3}}));
}
inline Instance p5_cograph() {
  return Instance(Problem::CographDeletion, undirected(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
}
inline Instance triangle_vc() {
  return Instance(Problem::VertexCover, undirected(3, {{0, 1}, {1, 2}, {0, 2}}));
}

}  // namespace fixture
