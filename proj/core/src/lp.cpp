#include "essentia/lp.hpp"

#include <set>
#include <string>

#include "essentia/errors.hpp"
#include "essentia/simplex.hpp"

namespace essentia {

namespace {

// Covering LP over a growing pool, held as its packing dual.
class RestrictedLp {
 public:
  RestrictedLp(int n, std::optional<int> pinned)
      : n_(n), pinned_(pinned), row_of_(static_cast<std::size_t>(n), -1) {
    int rows = 0;
    for (int u = 0; u < n; ++u)
      if (!pinned || u != *pinned) row_of_[u] = rows++;
    simplex_.emplace(rows);
  }

  /// False if the obstacle was already present.
  bool add(const Obstacle& o) {
    VertexSet set = o.vertex_set();
    if (!seen_.insert(set).second) return false;
    std::vector<int> support;
    for (int u : set) {
      if (u < 0 || u >= n_) throw PreconditionViolated("obstacle vertex out of range");
      if (row_of_[u] >= 0) support.push_back(row_of_[u]);
    }
    if (support.empty())
      throw PinInfeasible("obstacle {" + std::to_string(*pinned_) +
                          "} cannot be hit with the pinned vertex at 0");
    simplex_->add_column(support);
    return true;
  }

  std::size_t optimize() { return simplex_->optimize(); }

  FractionalSolution solution() const {
    std::vector<Rational> x(static_cast<std::size_t>(n_), Rational(0));
    for (int u = 0; u < n_; ++u)
      if (row_of_[u] >= 0) x[u] = simplex_->dual(row_of_[u]);
    return {VertexWeights(std::move(x)), simplex_->objective()};
  }

 private:
  int n_;
  std::optional<int> pinned_;
  std::vector<int> row_of_;
  std::set<VertexSet> seen_;
  std::optional<PackingSimplex> simplex_;
};

void check_pin(const Instance& inst, std::optional<int> pinned) {
  if (pinned && (*pinned < 0 || *pinned >= inst.num_vertices()))
    throw InvalidInput("pinned vertex " + std::to_string(*pinned) + " out of range");
}

std::vector<Obstacle> seed_obstacles(const Instance& inst, int pinned) {
  const Graph& g = inst.graph();
  std::vector<Obstacle> seeds;
  if (inst.problem() == Problem::VertexCover) {
    for (int u : g.out_neighbors(pinned))
      seeds.push_back({ObstacleKind::Edge, {std::min(u, pinned), std::max(u, pinned)}});
  } else if (inst.problem() == Problem::CographDeletion) {
    for (auto& p4 : induced_p4s(g))
      if (contains(p4.vertex_set(), pinned)) seeds.push_back(std::move(p4));
  }
  return seeds;
}

}  // namespace

FractionalSolution solve(LpProblem& lp, const LpOptions& options, LpTrace* trace) {
  const Instance& inst = lp.instance;
  const int n = inst.num_vertices();
  check_pin(inst, lp.pinned);
  const std::size_t cap =
      options.max_cuts.value_or(static_cast<std::size_t>(10) * n * n);

  if (options.seed_pool && lp.pinned)
    for (auto& o : seed_obstacles(inst, *lp.pinned)) lp.pool.push_back(std::move(o));

  RestrictedLp restricted(n, lp.pinned);
  for (const auto& o : lp.pool) restricted.add(o);

  std::size_t cuts = 0;
  for (;;) {
    const std::size_t pivots = restricted.optimize();
    FractionalSolution x = restricted.solution();
    if (trace) {
      trace->restricted_values.push_back(x.value);
      trace->pivots += pivots;
    }
    auto violated = find_violated_obstacle(inst, x.weights, lp.pinned);
    if (!violated) {
      if (trace) trace->cuts_added = cuts;
      return x;
    }
    if (++cuts > cap)
      throw ResourceExceeded("cutting-plane loop exceeded " + std::to_string(cap) + " cuts");
    if (!restricted.add(*violated))
      throw Error("separation oracle returned a pooled constraint");
    lp.pool.push_back(std::move(*violated));
  }
}

FractionalSolution solve_restricted(const std::vector<Obstacle>& pool, int n,
                                    std::optional<int> pinned) {
  if (pinned && (*pinned < 0 || *pinned >= n))
    throw InvalidInput("pinned vertex " + std::to_string(*pinned) + " out of range");
  RestrictedLp restricted(n, pinned);
  for (const auto& o : pool) restricted.add(o);
  restricted.optimize();
  return restricted.solution();
}

bool verify_feasible(const LpProblem& lp, const FractionalSolution& x) {
  const int n = lp.instance.num_vertices();
  if (x.weights.size() != n) return false;
  for (int u = 0; u < n; ++u)
    if (x.weights[u] < 0 || x.weights[u] > 1) return false;
  if (lp.pinned && x.weights[*lp.pinned] != 0) return false;
  if (x.weights.total() != x.value) return false;
  return !find_violated_obstacle(lp.instance, x.weights);
}

}  // namespace essentia
