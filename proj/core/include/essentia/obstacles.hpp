#pragma once

#include <optional>
#include <span>
#include <vector>

#include "essentia/instance.hpp"

namespace essentia {

enum class ObstacleKind { TerminalPath, InducedP4, Edge, DirectedCycle };

ObstacleKind obstacle_kind(Problem p);

/// A vertex set every solution must intersect. `vertices` keeps the
/// structural order (path order, P4 order, cycle order from its smallest
/// vertex); `vertex_set()` gives the sorted set.
struct Obstacle {
  ObstacleKind kind = ObstacleKind::Edge;
  std::vector<int> vertices;

  VertexSet vertex_set() const { return make_vertex_set(vertices); }
  Rational weight(const VertexWeights& w) const;
  friend bool operator==(const Obstacle&, const Obstacle&) = default;
};

/// True iff deleting `x` leaves no obstacle.
bool is_solution(const Instance& inst, std::span<const int> x);

/// Structural check that `o` is a genuine obstacle of `inst`.
bool is_obstacle(const Instance& inst, const Obstacle& o);

/// Separation oracle. Returns a minimum-weight obstacle of weight strictly
/// below `threshold`, or nothing when every obstacle weighs at least
/// `threshold`. Multicut: per terminal pair shortest path, global minimum.
/// Cograph deletion: scan of all vertex quadruples. Vertex cover: all edges.
/// DFVS: minimum over v of the lightest cycle through v.
/// If `pinned` is given its weight must be zero (PreconditionViolated).
std::optional<Obstacle> find_violated_obstacle(const Instance& inst, const VertexWeights& w,
                                               std::optional<int> pinned = std::nullopt,
                                               const Rational& threshold = Rational(1));

/// Every inclusion-minimal obstacle exactly once (by vertex set), ordered by
/// cardinality then lexicographically. Exponential for multicut and DFVS;
/// meant for small instances.
std::vector<Obstacle> enumerate_obstacles_minimal(const Instance& inst);

/// All induced P4s of g - removed, each once, in path order a-b-c-d with a < d.
std::vector<Obstacle> induced_p4s(const Graph& g, std::span<const char> removed = {});

/// Branching support for exact search. Among obstacles of G - removed,
/// returns one minimising the number of vertices not in `excluded`
/// (ties: fewer vertices). Nothing when G - removed has no obstacle.
/// Both masks have length n; an empty span means all zero.
std::optional<Obstacle> min_branching_obstacle(const Instance& inst,
                                               std::span<const char> removed,
                                               std::span<const char> excluded);

}  // namespace essentia
