#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "essentia/lp.hpp"

namespace essentia {

/// Witness for one rounding run: an integral solution avoiding the pinned
/// vertex whose size is at most factor_bound times the fractional value.
struct RoundingCertificate {
  Problem problem = Problem::VertexMulticut;
  int pinned = 0;
  Rational factor_bound;
  Rational fractional_value;
  VertexSet integral_set;
  /// Intermediate sets in the order they were produced, e.g. "D"; "S", "T",
  /// "X_S", "X_T"; "large_1", ..., "core", "core_neighbors", "core_non_neighbors".
  std::vector<std::pair<std::string, VertexSet>> witness_sets;
  /// Cograph only: set when the final split ran, true iff every core vertex
  /// had weight at least 1/5 at that point.
  std::optional<bool> core_weights_at_least_fifth;

  const VertexSet* witness(const std::string& name) const;
};

/// Undirected multicut with {v} a solution: D = vertices all of whose paths
/// to v weigh at least 1/2, then a minimum (v, D)-separator avoiding v in the
/// bidirected graph with a sink behind D. Factor 2.
/// Throws PreconditionViolated if {v} is not a solution or x is infeasible.
RoundingCertificate round_multicut(const Instance& inst, int v, const FractionalSolution& x);

/// Directed multicut with {v} a solution: S (all paths into v weigh >= 1/2)
/// and T (all paths out of v weigh >= 1/2), then the union of a minimum
/// (S, v)-separator and a minimum (v, T)-separator, both avoiding v. Factor 4.
RoundingCertificate round_directed_multicut(const Instance& inst, int v,
                                            const FractionalSolution& x);

/// Cograph deletion with g - v a cograph. Repeatedly takes the vertices of
/// the remaining P4s whose weight is at least 2/5; once there are none, takes
/// the smaller side of the remaining P4 vertices split by adjacency to v
/// (ties go to the non-neighbours). The fractional solution is restricted,
/// not re-solved, between rounds. Factor 5/2.
RoundingCertificate round_cograph(const Graph& g, int v, const FractionalSolution& x);

/// Replays a certificate: the set solves `inst`, avoids the pinned vertex,
/// and respects the factor bound. Returns the failed checks (empty if valid).
std::vector<std::string> check_certificate(const Instance& inst, const RoundingCertificate& c);

}  // namespace essentia
