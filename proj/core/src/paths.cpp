#include "essentia/paths.hpp"

#include <queue>

#include "essentia/errors.hpp"

namespace essentia {

namespace {

bool is_blocked(std::span<const char> blocked, int u) {
  return !blocked.empty() && blocked[u] != 0;
}

struct Label {
  Rational dist;
  int vertex;
  bool operator>(const Label& o) const {
    if (dist != o.dist) return dist > o.dist;
    return vertex > o.vertex;
  }
};

}  // namespace

std::vector<std::optional<Rational>> path_weights_from(const Graph& g, const VertexWeights& w,
                                                       std::span<const int> sources, bool reverse,
                                                       std::span<const char> blocked) {
  const int n = g.num_vertices();
  std::vector<std::optional<Rational>> dist(static_cast<std::size_t>(n));
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::priority_queue<Label, std::vector<Label>, std::greater<>> queue;
  for (int s : sources) {
    if (is_blocked(blocked, s)) continue;
    if (!dist[s] || w[s] < *dist[s]) {
      dist[s] = w[s];
      queue.push({w[s], s});
    }
  }
  while (!queue.empty()) {
    Label top = queue.top();
    queue.pop();
    const int u = top.vertex;
    if (done[u]) continue;
    done[u] = 1;
    auto next = reverse ? g.in_neighbors(u) : g.out_neighbors(u);
    for (int y : next) {
      if (done[y] || is_blocked(blocked, y)) continue;
      Rational candidate = *dist[u] + w[y];
      if (!dist[y] || candidate < *dist[y]) {
        dist[y] = candidate;
        queue.push({std::move(candidate), y});
      }
    }
  }
  return dist;
}

std::optional<WeightedPath> shortest_weighted_path(const Graph& g, const VertexWeights& w,
                                                   std::span<const int> sources,
                                                   std::span<const int> targets,
                                                   std::span<const char> blocked) {
  const int n = g.num_vertices();
  // to_target[u]: minimum weight of a path from u into the target set.
  const auto to_target = path_weights_from(g, w, targets, /*reverse=*/true, blocked);
  std::vector<char> is_target(static_cast<std::size_t>(n), 0);
  for (int t : targets) is_target[t] = 1;

  int start = -1;
  for (int s : sources) {
    if (is_blocked(blocked, s) || !to_target[s]) continue;
    if (start < 0 || *to_target[s] < *to_target[start] ||
        (*to_target[s] == *to_target[start] && s < start))
      start = s;
  }
  if (start < 0) return std::nullopt;

  // Every minimum-weight path uses only tight arcs u->y with
  // to_target[u] == w[u] + to_target[y]. Greedily extend by the smallest
  // tight successor that still reaches a target without revisiting the path.
  auto tight = [&](int u, int y) {
    return !is_blocked(blocked, y) && to_target[y] && *to_target[u] == w[u] + *to_target[y];
  };
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  auto completes = [&](int y) {
    std::vector<char> seen(on_path);
    std::vector<int> stack{y};
    seen[y] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (is_target[u]) return true;
      for (int z : g.out_neighbors(u))
        if (!seen[z] && tight(u, z)) {
          seen[z] = 1;
          stack.push_back(z);
        }
    }
    return false;
  };

  WeightedPath result{*to_target[start], Path{{start}}};
  on_path[start] = 1;
  int u = start;
  while (!is_target[u]) {
    int chosen = -1;
    for (int y : g.out_neighbors(u)) {
      if (on_path[y] || !tight(u, y)) continue;
      if (completes(y)) {
        chosen = y;
        break;
      }
    }
    if (chosen < 0) throw Error("shortest_weighted_path: tight completion lost");
    on_path[chosen] = 1;
    result.path.vertices.push_back(chosen);
    u = chosen;
  }
  return result;
}

std::optional<WeightedPath> min_weight_cycle_through(const Graph& g, const VertexWeights& w,
                                                     int v) {
  if (!g.directed()) throw PreconditionViolated("min_weight_cycle_through needs a directed graph");
  std::vector<char> blocked(static_cast<std::size_t>(g.num_vertices()), 0);
  blocked[v] = 1;
  auto rest = shortest_weighted_path(g, w, g.out_neighbors(v), g.in_neighbors(v), blocked);
  if (!rest) return std::nullopt;
  WeightedPath cycle{w[v] + rest->distance, Path{{v}}};
  cycle.path.vertices.insert(cycle.path.vertices.end(), rest->path.vertices.begin(),
                             rest->path.vertices.end());
  return cycle;
}

}  // namespace essentia
