#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "essentia/instance.hpp"

namespace essentia {

/// Star with centre 0 and leaves 1..m; every pair of leaves is a terminal pair.
Instance gen_star_multicut(int m);

/// Cograph deletion: apex 0, matching edges {i, m + i} for i = 1..m, apex
/// adjacent to 1..m. The apex alone is a solution.
Instance gen_matching_apex(int m);

/// A generated reduction instance. `labels` names vertex groups ("P", "Q_in",
/// "Q_out" for DFVS; "P", "Q" for VC). copy_index[u] is the base copy a
/// P-vertex came from, -1 for Q vertices.
struct GadgetInstance {
  Instance instance;
  std::map<std::string, VertexSet> labels;
  std::vector<int> copy_index;
  int copies = 1;  ///< disjoint base copies forming P
  int m = 0;       ///< |Q_in| = |Q_out| (DFVS) or |Q| (VC)
};

/// P = disjoint copies of the base (enough for n eps / 2 to be integral),
/// Q_in = q_1..q_m, Q_out = q'_1..q'_m with m = (1 - eps/2) |P|, arcs
/// q_i -> q'_i, p -> q_i and q'_i -> p for all p, i.
/// Throws InvalidInput unless eps is in (0, 1] and the base is a DFVS instance.
GadgetInstance gen_dfvs_gadget(const Instance& base, const Rational& eps);

/// P = disjoint copies of the base (enough for n eps / 4 and m to be
/// integral), Q independent of size m = (1/2 - eps/2) |P|, joined completely
/// to P. Throws InvalidInput unless eps is in (0, 1/2] and the base is VC.
GadgetInstance gen_vc_gadget(const Instance& base, const Rational& eps);

/// DFVS -> directed multicut (pair (v, u) per arc (u, v)) or vertex cover ->
/// vertex multicut (pair (u, v) per edge). Both preserve the solution sets.
/// Throws InvalidInput for other pairs.
Instance convert(const Instance& inst, Problem target);

/// Reproducible G(n, 1/2) as a cograph deletion instance (one bit of
/// mt19937_64 output per vertex pair, pairs in lexicographic order).
Instance gen_gnp(int n, std::uint64_t seed);

struct RandomSpec {
  Problem problem = Problem::VertexCover;
  int n = 8;
  Rational edge_probability = Rational(2, 5);
  int terminal_pairs = 3;  ///< multicut only
};

/// Random instance of the given problem.
Instance gen_random(const RandomSpec& spec, std::uint64_t seed);

/// Random instance together with a vertex v such that {v} solves it.
/// Multicut: v is a hub joining groups with no arcs between them; terminal
/// pairs avoid v and are connected in G but not in G - v. Cograph deletion:
/// a random cograph plus an apex v, resampled until some P4 exists.
/// Throws InvalidInput for other problems or n < 3.
struct PinnedInstance {
  Instance instance;
  int pinned = 0;
};
PinnedInstance gen_random_singleton(const RandomSpec& spec, std::uint64_t seed);

/// Random cograph on n vertices built from a random cotree.
Graph gen_random_cograph(int n, std::uint64_t seed);

/// True iff every `size`-vertex subset of g induces a P4 (brute force).
bool every_subset_has_p4(const Graph& g, int size);

}  // namespace essentia
