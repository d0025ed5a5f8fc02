#include "essentia/detection.hpp"

#include <string>

#include "essentia/errors.hpp"
#include "essentia/exact_solver.hpp"
#include "parallel.hpp"

namespace essentia {

Rational detection_factor(Problem p) {
  switch (p) {
    case Problem::VertexMulticut: return 3;
    case Problem::DirectedVertexMulticut: return 5;
    case Problem::CographDeletion: return Rational(7, 2);
    case Problem::VertexCover:
    case Problem::DirectedFeedbackVertexSet: return 2;
  }
  return 0;
}

std::vector<Rational> avoiding_lp_values(const Instance& inst, const DetectionOptions& options) {
  const int n = inst.num_vertices();
  std::vector<Rational> values(static_cast<std::size_t>(n));
  detail::parallel_for(n, options.jobs, [&](int v) {
    LpProblem lp{inst, v, {}};
    values[v] = solve(lp, options.lp).value;
  });
  return values;
}

DetectionResult select_above(std::vector<Rational> lp_values, int k) {
  DetectionResult result;
  result.threshold_used = k;
  for (int v = 0; v < static_cast<int>(lp_values.size()); ++v)
    if (lp_values[v] > result.threshold_used) result.selected.push_back(v);
  result.lp_values = std::move(lp_values);
  return result;
}

DetectionResult detect(const DetectionRequest& request, const DetectionOptions& options) {
  const int n = request.instance.num_vertices();
  if (request.k < 0 || request.k > n)
    throw InvalidInput("k = " + std::to_string(request.k) + " outside [0, " + std::to_string(n) + "]");
  return select_above(avoiding_lp_values(request.instance, options), request.k);
}

VertexSet essential_vertices_exact(const Instance& inst, const Rational& c,
                                   const ExactOptions& options) {
  const int n = inst.num_vertices();
  if (n > options.size_cap)
    throw ResourceExceeded("instance has " + std::to_string(n) + " vertices, size cap is " +
                           std::to_string(options.size_cap));
  const int opt = opt_value(inst, options.node_cap);
  VertexSet essential;
  for (int v = 0; v < n; ++v) {
    SolveBudget budget;
    budget.forbidden = {v};
    budget.node_cap = options.node_cap;
    auto avoiding = min_solution_size(inst, budget);
    if (!avoiding || Rational(*avoiding) > c * opt) essential.push_back(v);
  }
  return essential;
}

}  // namespace essentia
