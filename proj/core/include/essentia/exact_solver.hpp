#pragma once

#include <cstdint>
#include <optional>

#include "essentia/instance.hpp"

namespace essentia {

/// Node cap used when a budget does not set one: ESSENTIA_NODE_CAP if set,
/// otherwise 50 million.
std::uint64_t default_node_cap();

struct SolveBudget {
  std::optional<int> max_k;  ///< only solutions of size <= max_k count
  VertexSet forbidden;       ///< vertices that may not be used
  std::optional<std::uint64_t> node_cap;
};

/// Minimum-size solution avoiding `forbidden` with size <= max_k, or nothing
/// if none exists. Among minimum solutions the lexicographically least vertex
/// set is returned. Branches on an obstacle with fewest usable vertices:
/// branch i takes its i-th usable vertex and forbids the earlier ones. Prunes
/// with a greedy packing of obstacles disjoint on usable vertices.
/// Throws ResourceExceeded when the node cap is hit.
std::optional<VertexSet> solve_exact(const Instance& inst, const SolveBudget& budget = {});

/// Size of a minimum solution under the budget, without the lexicographic
/// refinement. Nothing if no solution fits.
std::optional<int> min_solution_size(const Instance& inst, const SolveBudget& budget = {});

/// Size of a minimum solution of the unconstrained instance.
int opt_value(const Instance& inst, std::optional<std::uint64_t> node_cap = std::nullopt);

}  // namespace essentia
