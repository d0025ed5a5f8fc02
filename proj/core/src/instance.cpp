#include "essentia/instance.hpp"

#include <algorithm>
#include <cctype>

#include "essentia/errors.hpp"

namespace essentia {

std::string_view problem_tag(Problem p) {
  switch (p) {
    case Problem::VertexMulticut: return "vertex-multicut";
    case Problem::DirectedVertexMulticut: return "directed-vertex-multicut";
    case Problem::CographDeletion: return "cograph-deletion";
    case Problem::VertexCover: return "vertex-cover";
    case Problem::DirectedFeedbackVertexSet: return "dfvs";
  }
  return "unknown";
}

Problem parse_problem(std::string_view tag) {
  std::string lower(tag);
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  std::replace(lower.begin(), lower.end(), '_', '-');
  if (lower == "vertex-multicut" || lower == "vm") return Problem::VertexMulticut;
  if (lower == "directed-vertex-multicut" || lower == "dvm")
    return Problem::DirectedVertexMulticut;
  if (lower == "cograph-deletion" || lower == "cd") return Problem::CographDeletion;
  if (lower == "vertex-cover" || lower == "vc") return Problem::VertexCover;
  if (lower == "dfvs" || lower == "directed-feedback-vertex-set")
    return Problem::DirectedFeedbackVertexSet;
  throw InvalidInput("unknown problem tag '" + std::string(tag) + "'");
}

bool is_multicut(Problem p) {
  return p == Problem::VertexMulticut || p == Problem::DirectedVertexMulticut;
}

bool needs_directed(Problem p) {
  return p == Problem::DirectedVertexMulticut || p == Problem::DirectedFeedbackVertexSet;
}

Instance::Instance(Problem problem, Graph graph, std::vector<Arc> terminals)
    : problem_(problem), graph_(std::move(graph)), terminals_(std::move(terminals)) {
  if (graph_.directed() != needs_directed(problem_))
    throw InvalidInput(std::string(problem_tag(problem_)) + " requires " +
                       (needs_directed(problem_) ? "a directed" : "an undirected") + " graph");
  if (!is_multicut(problem_) && !terminals_.empty())
    throw InvalidInput(std::string(problem_tag(problem_)) + " takes no terminal pairs");
  const int n = graph_.num_vertices();
  for (std::size_t i = 0; i < terminals_.size(); ++i) {
    auto [s, t] = terminals_[i];
    const std::string where = "terminals[" + std::to_string(i) + "]";
    if (s < 0 || s >= n || t < 0 || t >= n)
      throw InvalidInput(where + ": vertex out of range [0, " + std::to_string(n) + ")");
    if (s == t) throw InvalidInput(where + ": both terminals are vertex " + std::to_string(s));
  }
}

RestrictedInstance remove_vertices(const Instance& inst, std::span<const int> removed) {
  const int n = inst.num_vertices();
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  for (int u : removed) gone[u] = 1;
  RestrictedInstance result;
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  for (int u = 0; u < n; ++u)
    if (!gone[u]) {
      index[u] = static_cast<int>(result.original.size());
      result.original.push_back(u);
    }
  Graph sub = inst.graph().induced(result.original);
  std::vector<Arc> pairs;
  for (auto [s, t] : inst.terminals())
    if (!gone[s] && !gone[t]) pairs.emplace_back(index[s], index[t]);
  result.instance = Instance(inst.problem(), std::move(sub), std::move(pairs));
  return result;
}

}  // namespace essentia
