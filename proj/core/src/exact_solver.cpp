#include "essentia/exact_solver.hpp"

#include <cstdlib>
#include <string>

#include "essentia/errors.hpp"
#include "essentia/obstacles.hpp"

namespace essentia {

std::uint64_t default_node_cap() {
  if (const char* env = std::getenv("ESSENTIA_NODE_CAP")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return 50'000'000;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const Instance& inst, const SolveBudget& budget)
      : inst_(inst),
        n_(inst.num_vertices()),
        taken_(static_cast<std::size_t>(n_), 0),
        banned_(static_cast<std::size_t>(n_), 0),
        cap_(budget.node_cap.value_or(default_node_cap())) {
    for (int f : budget.forbidden) {
      if (f < 0 || f >= n_) throw InvalidInput("forbidden vertex " + std::to_string(f) + " out of range");
      banned_[f] = 1;
    }
    if (budget.max_k && *budget.max_k < 0) throw InvalidInput("negative budget");
    limit_ = budget.max_k ? std::min(*budget.max_k, n_) : n_;
  }

  int limit() const { return limit_; }

  /// Minimum solution size extending the current decisions, if <= bound.
  std::optional<int> minimum(int bound) {
    best_size_ = bound + 1;
    stop_at_first_ = false;
    found_.reset();
    search(count_taken());
    if (!found_) return std::nullopt;
    return best_size_;
  }

  /// Some solution extending the current decisions with size <= bound.
  std::optional<VertexSet> any_within(int bound) {
    best_size_ = bound + 1;
    stop_at_first_ = true;
    found_.reset();
    search(count_taken());
    return found_;
  }

  const std::optional<VertexSet>& last_found() const { return found_; }

  void take(int v) { taken_[v] = 1; }
  void untake(int v) { taken_[v] = 0; }
  void ban(int v) { banned_[v] = 1; }
  bool banned(int v) const { return banned_[v] != 0; }

 private:
  int count_taken() const {
    int count = 0;
    for (char t : taken_) count += t;
    return count;
  }

  std::vector<int> usable(const Obstacle& o) const {
    std::vector<int> result;
    for (int u : o.vertices)
      if (!banned_[u]) result.push_back(u);
    return make_vertex_set(std::move(result));
  }

  // Obstacles pairwise disjoint on usable vertices each need their own
  // solution vertex. Returns n + 1 if some obstacle has no usable vertex.
  int packing_bound(const Obstacle& first) const {
    std::vector<char> blocked(taken_);
    int count = 0;
    std::optional<Obstacle> next = first;
    while (next) {
      auto hit = usable(*next);
      if (hit.empty()) return n_ + 1;
      ++count;
      for (int u : hit) blocked[u] = 1;
      next = min_branching_obstacle(inst_, blocked, banned_);
    }
    return count;
  }

  void search(int size) {
    if (stop_at_first_ && found_) return;
    if (++nodes_ > cap_)
      throw ResourceExceeded("exact search exceeded node cap " + std::to_string(cap_));
    auto obstacle = min_branching_obstacle(inst_, taken_, banned_);
    if (!obstacle) {
      if (size < best_size_) {
        best_size_ = size;
        VertexSet solution;
        for (int u = 0; u < n_; ++u)
          if (taken_[u]) solution.push_back(u);
        found_ = std::move(solution);
      }
      return;
    }
    const auto branch = usable(*obstacle);
    if (branch.empty()) return;
    if (size + packing_bound(*obstacle) >= best_size_) return;

    std::vector<int> newly_banned;
    for (int u : branch) {
      taken_[u] = 1;
      search(size + 1);
      taken_[u] = 0;
      if (stop_at_first_ && found_) break;
      banned_[u] = 1;
      newly_banned.push_back(u);
    }
    for (int u : newly_banned) banned_[u] = 0;
  }

  const Instance& inst_;
  int n_;
  std::vector<char> taken_;
  std::vector<char> banned_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  int limit_ = 0;
  int best_size_ = 0;
  bool stop_at_first_ = false;
  std::optional<VertexSet> found_;
};

}  // namespace

std::optional<int> min_solution_size(const Instance& inst, const SolveBudget& budget) {
  BranchAndBound search(inst, budget);
  return search.minimum(search.limit());
}

std::optional<VertexSet> solve_exact(const Instance& inst, const SolveBudget& budget) {
  BranchAndBound search(inst, budget);
  auto size = search.minimum(search.limit());
  if (!size) return std::nullopt;
  const int opt = *size;
  VertexSet witness = *search.last_found();

  // Greedy lexicographic refinement: take each vertex in increasing order if
  // some minimum solution consistent with the choices so far contains it.
  VertexSet chosen;
  for (int v = 0; v < inst.num_vertices() && static_cast<int>(chosen.size()) < opt; ++v) {
    if (search.banned(v)) continue;
    if (contains(witness, v)) {
      search.take(v);
      chosen.push_back(v);
      continue;
    }
    search.take(v);
    if (auto other = search.any_within(opt)) {
      witness = *other;
      chosen.push_back(v);
    } else {
      search.untake(v);
      search.ban(v);
    }
  }
  return chosen;
}

int opt_value(const Instance& inst, std::optional<std::uint64_t> node_cap) {
  SolveBudget budget;
  budget.node_cap = node_cap;
  auto size = min_solution_size(inst, budget);
  if (!size) throw Error("instance has no solution");
  return *size;
}

}  // namespace essentia
