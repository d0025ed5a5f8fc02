#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "essentia/graph.hpp"

namespace essentia {

enum class Problem {
  VertexMulticut,
  DirectedVertexMulticut,
  CographDeletion,
  VertexCover,
  DirectedFeedbackVertexSet,
};

inline constexpr Problem kAllProblems[] = {
    Problem::VertexMulticut, Problem::DirectedVertexMulticut, Problem::CographDeletion,
    Problem::VertexCover, Problem::DirectedFeedbackVertexSet};

/// Canonical tag: "vertex-multicut", "directed-vertex-multicut",
/// "cograph-deletion", "vertex-cover", "dfvs".
std::string_view problem_tag(Problem p);
/// Accepts the canonical tags and the short forms VM, DVM, CD, VC, DFVS
/// (case-insensitive). Throws InvalidInput otherwise.
Problem parse_problem(std::string_view tag);

bool is_multicut(Problem p);
bool needs_directed(Problem p);

/// A problem-tagged graph whose obstacle family is implicit.
/// Terminal pairs are ordered for the directed multicut and unordered
/// otherwise; they are empty unless the problem is a multicut.
class Instance {
 public:
  Instance() = default;
  /// Throws InvalidInput when the graph orientation does not match the
  /// problem, a terminal is out of range, a pair repeats a vertex, or
  /// terminals are given for a non-multicut problem.
  Instance(Problem problem, Graph graph, std::vector<Arc> terminals = {});

  Problem problem() const { return problem_; }
  const Graph& graph() const { return graph_; }
  const std::vector<Arc>& terminals() const { return terminals_; }
  int num_vertices() const { return graph_.num_vertices(); }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Problem problem_ = Problem::VertexCover;
  Graph graph_;
  std::vector<Arc> terminals_;
};

/// The instance G - X, with surviving vertices relabelled 0..n'-1 in
/// increasing order. Terminal pairs losing an endpoint are dropped.
struct RestrictedInstance {
  Instance instance;
  std::vector<int> original;  ///< new id -> old id
};

RestrictedInstance remove_vertices(const Instance& inst, std::span<const int> removed);

}  // namespace essentia
