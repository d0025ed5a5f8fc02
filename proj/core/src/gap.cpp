#include "essentia/gap.hpp"

#include "essentia/errors.hpp"
#include "essentia/exact_solver.hpp"
#include "essentia/lp.hpp"

namespace essentia {

GapReport measure_gap(const Instance& inst, std::optional<int> pinned, const GapOptions& options) {
  const int n = inst.num_vertices();
  if (n > options.size_cap)
    throw ResourceExceeded("gap: n = " + std::to_string(n) + " exceeds size cap " +
                           std::to_string(options.size_cap));
  if (pinned && (*pinned < 0 || *pinned >= n))
    throw InvalidInput("gap: pinned vertex " + std::to_string(*pinned) + " out of range");

  GapReport report;
  report.pinned = pinned;
  LpProblem lp{inst, pinned, {}};
  report.fractional = solve(lp).value;

  SolveBudget budget;
  if (pinned) budget.forbidden = {*pinned};
  budget.node_cap = options.node_cap;
  auto size = min_solution_size(inst, budget);
  report.integral = size ? *size : -1;
  if (size && report.fractional > 0) {
    report.ratio = Rational(*size) / report.fractional;
    report.ratio->canonicalize();
  }
  return report;
}

}  // namespace essentia
