#include "essentia/driver.hpp"

#include <algorithm>

#include "essentia/errors.hpp"
#include "essentia/exact_solver.hpp"

namespace essentia {

std::optional<VertexSet> solve_with_selection(const Instance& inst, const VertexSet& selected,
                                              int residual_budget,
                                              std::optional<std::uint64_t> node_cap) {
  if (residual_budget < 0) return std::nullopt;
  const auto residual = remove_vertices(inst, selected);
  SolveBudget budget;
  budget.max_k = residual_budget;
  budget.node_cap = node_cap;
  auto rest = solve_exact(residual.instance, budget);
  if (!rest) return std::nullopt;
  VertexSet solution = selected;
  for (int u : *rest) solution.push_back(residual.original[u]);
  return make_vertex_set(std::move(solution));
}

DriverReport solve_with_detection(const Instance& inst, const DriverOptions& options) {
  const int n = inst.num_vertices();
  const auto values = avoiding_lp_values(inst, options.detection);
  std::vector<VertexSet> selection(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) selection[k] = select_above(values, k).selected;

  DriverReport report;
  for (int b = 0; b <= n; ++b) {
    for (int k = b; k <= n; ++k) {
      const auto& s = selection[k];
      if (k - static_cast<int>(s.size()) != b) continue;
      auto solution = solve_with_selection(inst, s, b, options.node_cap);
      report.iterations.push_back({b, k, static_cast<int>(s.size()), solution.has_value()});
      if (solution) {
        report.solution = std::move(*solution);
        report.opt = static_cast<int>(report.solution.size());
        report.detected = s;
        report.residual_budget = b;
        return report;
      }
    }
  }
  throw Error("solve_with_detection: no stage succeeded");
}

}  // namespace essentia
