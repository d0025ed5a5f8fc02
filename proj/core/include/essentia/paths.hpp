#pragma once

#include <optional>
#include <span>
#include <vector>

#include "essentia/graph.hpp"

namespace essentia {

struct WeightedPath {
  Rational distance;
  Path path;
};

/// Vertex-weighted shortest path. A path's weight is the sum of the weights
/// of all its vertices, both endpoints included. Among minimum-weight simple
/// paths the lexicographically smallest vertex sequence is returned.
/// Vertices with blocked[u] != 0 are unusable; an empty span blocks nothing.
std::optional<WeightedPath> shortest_weighted_path(const Graph& g, const VertexWeights& w,
                                                   std::span<const int> sources,
                                                   std::span<const int> targets,
                                                   std::span<const char> blocked = {});

/// Minimum-weight directed simple cycle through v, listed starting at v.
/// Throws PreconditionViolated for undirected graphs.
std::optional<WeightedPath> min_weight_cycle_through(const Graph& g, const VertexWeights& w,
                                                     int v);

/// Minimum path weight from any source to every vertex (absent when
/// unreachable). With `reverse`, arcs are followed backwards, which yields the
/// minimum weight of a path from each vertex into the source set.
std::vector<std::optional<Rational>> path_weights_from(const Graph& g, const VertexWeights& w,
                                                       std::span<const int> sources,
                                                       bool reverse = false,
                                                       std::span<const char> blocked = {});

}  // namespace essentia
