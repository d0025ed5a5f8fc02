#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "essentia/obstacles.hpp"

namespace essentia {

/// The hitting-set LP  min sum x_u  s.t.  x(S) >= 1 for every obstacle S,
/// 0 <= x <= 1, optionally with x_v = 0 for a pinned vertex v.
/// `pool` holds the explicitly generated constraints and grows while solving.
struct LpProblem {
  Instance instance;
  std::optional<int> pinned;
  std::vector<Obstacle> pool;
};

struct FractionalSolution {
  VertexWeights weights;
  Rational value;
};

struct LpOptions {
  /// Cut cap; nullopt means 10 * n^2.
  std::optional<std::size_t> max_cuts;
  /// Seed the pool with the edges or induced P4s through the pinned vertex.
  bool seed_pool = true;
};

/// Optional diagnostics from `solve`.
struct LpTrace {
  std::vector<Rational> restricted_values;  ///< value after each restricted solve
  std::size_t cuts_added = 0;
  std::size_t pivots = 0;
};

/// Cutting-plane solve over the separation oracle with exact simplex.
/// The result is feasible for every obstacle and optimal for the full LP.
/// Throws ResourceExceeded past the cut cap and PinInfeasible if an obstacle
/// consists of the pinned vertex alone.
FractionalSolution solve(LpProblem& lp, const LpOptions& options = {}, LpTrace* trace = nullptr);

/// Exact optimum of the LP restricted to the given obstacles.
FractionalSolution solve_restricted(const std::vector<Obstacle>& pool, int n,
                                    std::optional<int> pinned);

/// Independent audit: box and pin constraints, value consistency, and no
/// obstacle of weight below 1.
bool verify_feasible(const LpProblem& lp, const FractionalSolution& x);

}  // namespace essentia
