#pragma once

#include <span>

#include "essentia/graph.hpp"

namespace essentia {

/// Minimum-cardinality vertex set X, disjoint from `forbidden`, meeting every
/// path from `sources` to `targets` (undirected graphs are treated as
/// bidirected). X may contain sources and targets themselves. Computed by
/// splitting each vertex u into u_in -> u_out with capacity 1 (unbounded for
/// forbidden vertices) and running a unit-capacity max flow, so |X| equals the
/// maximum number of vertex-disjoint source-target paths.
///
/// Throws SeparatorInfeasible when some source-target path runs entirely
/// through forbidden vertices.
VertexSet min_vertex_separator(const Graph& g, std::span<const int> sources,
                               std::span<const int> targets, std::span<const int> forbidden);

}  // namespace essentia
