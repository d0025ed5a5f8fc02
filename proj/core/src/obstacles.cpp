#include "essentia/obstacles.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <set>

#include "essentia/errors.hpp"
#include "essentia/paths.hpp"

namespace essentia {

namespace {

bool masked(std::span<const char> mask, int u) { return !mask.empty() && mask[u] != 0; }

std::vector<char> mask_of(int n, std::span<const int> members) {
  std::vector<char> mask(static_cast<std::size_t>(n), 0);
  for (int u : members) mask[u] = 1;
  return mask;
}

bool reaches(const Graph& g, int s, int t, std::span<const char> removed) {
  if (masked(removed, s) || masked(removed, t)) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<int> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (u == t) return true;
    for (int y : g.out_neighbors(u))
      if (!seen[y] && !masked(removed, y)) {
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  return false;
}

bool acyclic(const Graph& g, std::span<const char> removed) {
  const int n = g.num_vertices();
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  int alive = 0;
  for (int u = 0; u < n; ++u) {
    if (masked(removed, u)) continue;
    ++alive;
    for (int y : g.out_neighbors(u))
      if (!masked(removed, y)) ++indegree[y];
  }
  std::vector<int> ready;
  for (int u = 0; u < n; ++u)
    if (!masked(removed, u) && indegree[u] == 0) ready.push_back(u);
  int emitted = 0;
  while (!ready.empty()) {
    int u = ready.back();
    ready.pop_back();
    ++emitted;
    for (int y : g.out_neighbors(u))
      if (!masked(removed, y) && --indegree[y] == 0) ready.push_back(y);
  }
  return emitted == alive;
}

// Rotates a cycle so that its smallest vertex comes first.
std::vector<int> canonical_cycle(std::vector<int> cycle) {
  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  return cycle;
}

// 0-1 BFS where entering a vertex costs 1 unless it is excluded.
struct ZeroOneSearch {
  std::vector<int> dist;
  std::vector<int> parent;
};

constexpr int kUnreached = std::numeric_limits<int>::max();

ZeroOneSearch zero_one_bfs(const Graph& g, std::span<const int> starts,
                           std::span<const char> removed, std::span<const char> excluded,
                           int blocked_vertex = -1) {
  const int n = g.num_vertices();
  ZeroOneSearch s{std::vector<int>(static_cast<std::size_t>(n), kUnreached),
                  std::vector<int>(static_cast<std::size_t>(n), -1)};
  auto cost = [&](int u) { return masked(excluded, u) ? 0 : 1; };
  std::deque<int> queue;
  for (int u : starts) {
    if (masked(removed, u) || u == blocked_vertex) continue;
    if (cost(u) < s.dist[u]) {
      s.dist[u] = cost(u);
      if (cost(u) == 0) queue.push_front(u);
      else queue.push_back(u);
    }
  }
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (done[u]) continue;
    done[u] = 1;
    for (int y : g.out_neighbors(u)) {
      if (masked(removed, y) || y == blocked_vertex || done[y]) continue;
      int candidate = s.dist[u] + cost(y);
      if (candidate < s.dist[y]) {
        s.dist[y] = candidate;
        s.parent[y] = u;
        if (cost(y) == 0) queue.push_front(y);
        else queue.push_back(y);
      }
    }
  }
  return s;
}

std::vector<int> trace_back(const ZeroOneSearch& s, int end) {
  std::vector<int> path;
  for (int u = end; u >= 0; u = s.parent[u]) path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

int hittable_count(const std::vector<int>& vertices, std::span<const char> excluded) {
  int count = 0;
  for (int u : vertices)
    if (!masked(excluded, u)) ++count;
  return count;
}

// Keeps `candidate` if it beats `best` on (hittable count, size).
void keep_better(std::optional<Obstacle>& best, int& best_count, Obstacle candidate,
                 std::span<const char> excluded) {
  int count = hittable_count(candidate.vertices, excluded);
  if (!best || count < best_count ||
      (count == best_count && candidate.vertices.size() < best->vertices.size())) {
    best_count = count;
    best = std::move(candidate);
  }
}

// ---- exhaustive enumeration helpers ------------------------------------

using Bits = std::vector<std::uint64_t>;

Bits to_bits(int n, const std::vector<int>& members) {
  Bits bits(static_cast<std::size_t>((n + 63) / 64), 0);
  for (int u : members) bits[u / 64] |= std::uint64_t{1} << (u % 64);
  return bits;
}

bool is_subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

void all_simple_paths(const Graph& g, int s, int t, std::vector<int>& path,
                      std::vector<char>& on_path, std::vector<std::vector<int>>& out) {
  int u = path.back();
  if (u == t) {
    out.push_back(path);
    return;
  }
  for (int y : g.out_neighbors(u)) {
    if (on_path[y]) continue;
    on_path[y] = 1;
    path.push_back(y);
    all_simple_paths(g, s, t, path, on_path, out);
    path.pop_back();
    on_path[y] = 0;
  }
}

void all_cycles_from(const Graph& g, int start, std::vector<int>& path, std::vector<char>& on_path,
                     std::vector<std::vector<int>>& out) {
  int u = path.back();
  for (int y : g.out_neighbors(u)) {
    if (y == start) {
      out.push_back(path);
    } else if (y > start && !on_path[y]) {
      on_path[y] = 1;
      path.push_back(y);
      all_cycles_from(g, start, path, on_path, out);
      path.pop_back();
      on_path[y] = 0;
    }
  }
}

}  // namespace

ObstacleKind obstacle_kind(Problem p) {
  switch (p) {
    case Problem::VertexMulticut:
    case Problem::DirectedVertexMulticut: return ObstacleKind::TerminalPath;
    case Problem::CographDeletion: return ObstacleKind::InducedP4;
    case Problem::VertexCover: return ObstacleKind::Edge;
    case Problem::DirectedFeedbackVertexSet: return ObstacleKind::DirectedCycle;
  }
  return ObstacleKind::Edge;
}

Rational Obstacle::weight(const VertexWeights& w) const {
  Rational sum = 0;
  for (int u : vertices) sum += w[u];
  return sum;
}

std::vector<Obstacle> induced_p4s(const Graph& g, std::span<const char> removed) {
  // Centre edge b-c; a a private neighbour of b, d a private neighbour of c.
  const int n = g.num_vertices();
  std::vector<Obstacle> result;
  for (int b = 0; b < n; ++b) {
    if (masked(removed, b)) continue;
    for (int c : g.out_neighbors(b)) {
      if (masked(removed, c)) continue;
      for (int a : g.out_neighbors(b)) {
        if (a == c || masked(removed, a) || g.adjacent(a, c)) continue;
        for (int d : g.out_neighbors(c)) {
          if (d == b || d == a || masked(removed, d) || g.adjacent(d, b) || g.adjacent(a, d))
            continue;
          if (a < d) result.push_back({ObstacleKind::InducedP4, {a, b, c, d}});
        }
      }
    }
  }
  return result;
}

bool is_solution(const Instance& inst, std::span<const int> x) {
  const Graph& g = inst.graph();
  const auto removed = mask_of(g.num_vertices(), x);
  switch (inst.problem()) {
    case Problem::VertexMulticut:
    case Problem::DirectedVertexMulticut:
      for (auto [s, t] : inst.terminals())
        if (reaches(g, s, t, removed)) return false;
      return true;
    case Problem::CographDeletion: return induced_p4s(g, removed).empty();
    case Problem::VertexCover:
      for (auto [u, v] : g.arcs())
        if (!removed[u] && !removed[v]) return false;
      return true;
    case Problem::DirectedFeedbackVertexSet: return acyclic(g, removed);
  }
  return false;
}

bool is_obstacle(const Instance& inst, const Obstacle& o) {
  const Graph& g = inst.graph();
  const int n = g.num_vertices();
  if (o.kind != obstacle_kind(inst.problem()) || o.vertices.empty()) return false;
  for (int u : o.vertices)
    if (u < 0 || u >= n) return false;
  if (make_vertex_set(o.vertices).size() != o.vertices.size()) return false;
  const auto& v = o.vertices;
  auto consecutive_linked = [&] {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (!g.has_arc(v[i], v[i + 1])) return false;
    return true;
  };
  switch (o.kind) {
    case ObstacleKind::TerminalPath: {
      if (!consecutive_linked()) return false;
      for (auto [s, t] : inst.terminals()) {
        if (s == v.front() && t == v.back()) return true;
        if (!g.directed() && t == v.front() && s == v.back()) return true;
      }
      return false;
    }
    case ObstacleKind::InducedP4: {
      if (v.size() != 4) return false;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
          if (g.adjacent(v[i], v[j]) != (j == i + 1)) return false;
      return true;
    }
    case ObstacleKind::Edge: return v.size() == 2 && g.adjacent(v[0], v[1]);
    case ObstacleKind::DirectedCycle:
      return v.size() >= 2 && consecutive_linked() && g.has_arc(v.back(), v.front());
  }
  return false;
}

std::optional<Obstacle> find_violated_obstacle(const Instance& inst, const VertexWeights& w,
                                               std::optional<int> pinned,
                                               const Rational& threshold) {
  const Graph& g = inst.graph();
  const int n = g.num_vertices();
  if (w.size() != n) throw PreconditionViolated("weight vector length differs from n");
  if (pinned && w[*pinned] != 0) throw PreconditionViolated("pinned vertex has nonzero weight");

  switch (inst.problem()) {
    case Problem::VertexMulticut:
    case Problem::DirectedVertexMulticut: {
      std::map<int, std::vector<std::optional<Rational>>> from_source;
      std::optional<Rational> best;
      std::size_t best_pair = 0;
      const auto& pairs = inst.terminals();
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [s, t] = pairs[i];
        auto it = from_source.find(s);
        if (it == from_source.end()) {
          const int source[] = {s};
          it = from_source.emplace(s, path_weights_from(g, w, source)).first;
        }
        const auto& d = it->second[t];
        if (d && (!best || *d < *best)) {
          best = *d;
          best_pair = i;
        }
      }
      if (!best || *best >= threshold) return std::nullopt;
      const int source[] = {pairs[best_pair].first};
      const int target[] = {pairs[best_pair].second};
      auto path = shortest_weighted_path(g, w, source, target);
      return Obstacle{ObstacleKind::TerminalPath, std::move(path->path.vertices)};
    }
    case Problem::CographDeletion: {
      // All 4-subsets; a 4-vertex graph with 3 edges and degrees {1,1,2,2}
      // is exactly P4.
      std::optional<Obstacle> best;
      Rational best_weight;
      int q[4];
      for (q[0] = 0; q[0] < n; ++q[0])
        for (q[1] = q[0] + 1; q[1] < n; ++q[1])
          for (q[2] = q[1] + 1; q[2] < n; ++q[2])
            for (q[3] = q[2] + 1; q[3] < n; ++q[3]) {
              int degree[4] = {0, 0, 0, 0};
              int edges = 0;
              for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                  if (g.has_arc(q[i], q[j])) {
                    ++degree[i];
                    ++degree[j];
                    ++edges;
                  }
              if (edges != 3) continue;
              int ones = 0;
              bool valid = true;
              for (int d : degree) {
                if (d == 1) ++ones;
                else if (d != 2) valid = false;
              }
              if (!valid || ones != 2) continue;
              Rational weight = w[q[0]] + w[q[1]] + w[q[2]] + w[q[3]];
              if (best && weight >= best_weight) continue;
              // Order along the path, starting from the smaller end.
              int start = -1;
              for (int i = 0; i < 4 && start < 0; ++i)
                if (degree[i] == 1) start = i;
              std::vector<int> order{q[start]};
              int prev = -1;
              int cur = q[start];
              while (order.size() < 4)
                for (int i = 0; i < 4; ++i)
                  if (q[i] != prev && q[i] != cur && g.has_arc(cur, q[i])) {
                    prev = cur;
                    cur = q[i];
                    order.push_back(cur);
                    break;
                  }
              best_weight = std::move(weight);
              best = Obstacle{ObstacleKind::InducedP4, std::move(order)};
            }
      if (!best || best_weight >= threshold) return std::nullopt;
      return best;
    }
    case Problem::VertexCover: {
      std::optional<Obstacle> best;
      Rational best_weight;
      for (auto [u, v] : g.arcs()) {
        Rational weight = w[u] + w[v];
        if (!best || weight < best_weight) {
          best_weight = std::move(weight);
          best = Obstacle{ObstacleKind::Edge, {u, v}};
        }
      }
      if (!best || best_weight >= threshold) return std::nullopt;
      return best;
    }
    case Problem::DirectedFeedbackVertexSet: {
      std::optional<WeightedPath> best;
      for (int v = 0; v < n; ++v) {
        auto cycle = min_weight_cycle_through(g, w, v);
        if (cycle && (!best || cycle->distance < best->distance)) best = std::move(cycle);
      }
      if (!best || best->distance >= threshold) return std::nullopt;
      return Obstacle{ObstacleKind::DirectedCycle,
                      canonical_cycle(std::move(best->path.vertices))};
    }
  }
  return std::nullopt;
}

std::vector<Obstacle> enumerate_obstacles_minimal(const Instance& inst) {
  const Graph& g = inst.graph();
  const int n = g.num_vertices();
  const ObstacleKind kind = obstacle_kind(inst.problem());

  // Sequence per vertex set; the lexicographically smallest sequence wins.
  std::map<VertexSet, std::vector<int>> by_set;
  auto offer = [&](std::vector<int> sequence) {
    auto key = make_vertex_set(sequence);
    auto it = by_set.find(key);
    if (it == by_set.end()) by_set.emplace(std::move(key), std::move(sequence));
    else if (sequence < it->second) it->second = std::move(sequence);
  };

  switch (inst.problem()) {
    case Problem::VertexMulticut:
    case Problem::DirectedVertexMulticut:
      for (auto [s, t] : inst.terminals()) {
        std::vector<std::vector<int>> paths;
        std::vector<int> path{s};
        std::vector<char> on_path(static_cast<std::size_t>(n), 0);
        on_path[s] = 1;
        all_simple_paths(g, s, t, path, on_path, paths);
        for (auto& p : paths) offer(std::move(p));
      }
      break;
    case Problem::CographDeletion:
      for (auto& p4 : induced_p4s(g)) offer(std::move(p4.vertices));
      break;
    case Problem::VertexCover:
      for (auto [u, v] : g.arcs()) offer({u, v});
      break;
    case Problem::DirectedFeedbackVertexSet:
      for (int start = 0; start < n; ++start) {
        std::vector<std::vector<int>> cycles;
        std::vector<int> path{start};
        std::vector<char> on_path(static_cast<std::size_t>(n), 0);
        on_path[start] = 1;
        all_cycles_from(g, start, path, on_path, cycles);
        for (auto& c : cycles) offer(std::move(c));
      }
      break;
  }

  std::vector<std::pair<VertexSet, std::vector<int>>> entries(by_set.begin(), by_set.end());
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.first.size() < b.first.size();
  });
  std::vector<Bits> kept_bits;
  std::vector<Obstacle> result;
  for (auto& [set, sequence] : entries) {
    Bits bits = to_bits(n, set);
    bool dominated = false;
    for (const auto& smaller : kept_bits)
      if (is_subset(smaller, bits)) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    kept_bits.push_back(std::move(bits));
    result.push_back({kind, std::move(sequence)});
  }
  return result;
}

std::optional<Obstacle> min_branching_obstacle(const Instance& inst,
                                               std::span<const char> removed,
                                               std::span<const char> excluded) {
  const Graph& g = inst.graph();
  const int n = g.num_vertices();
  std::optional<Obstacle> best;
  int best_count = 0;

  switch (inst.problem()) {
    case Problem::VertexMulticut:
    case Problem::DirectedVertexMulticut: {
      std::map<int, ZeroOneSearch> from_source;
      for (auto [s, t] : inst.terminals()) {
        if (masked(removed, s) || masked(removed, t)) continue;
        auto it = from_source.find(s);
        if (it == from_source.end()) {
          const int start[] = {s};
          it = from_source.emplace(s, zero_one_bfs(g, start, removed, excluded)).first;
        }
        const auto& search = it->second;
        if (search.dist[t] == kUnreached) continue;
        if (best && search.dist[t] > best_count) continue;
        keep_better(best, best_count, {ObstacleKind::TerminalPath, trace_back(search, t)},
                    excluded);
        if (best_count == 0) return best;
      }
      return best;
    }
    case Problem::CographDeletion:
      for (auto& p4 : induced_p4s(g, removed)) {
        keep_better(best, best_count, std::move(p4), excluded);
        if (best_count == 0) return best;
      }
      return best;
    case Problem::VertexCover:
      for (auto [u, v] : g.arcs()) {
        if (masked(removed, u) || masked(removed, v)) continue;
        keep_better(best, best_count, {ObstacleKind::Edge, {u, v}}, excluded);
        if (best_count == 0) return best;
      }
      return best;
    case Problem::DirectedFeedbackVertexSet:
      for (int s = 0; s < n; ++s) {
        if (masked(removed, s)) continue;
        auto search = zero_one_bfs(g, g.out_neighbors(s), removed, excluded, s);
        int closing = -1;
        for (int u : g.in_neighbors(s))
          if (!masked(removed, u) && search.dist[u] != kUnreached &&
              (closing < 0 || search.dist[u] < search.dist[closing]))
            closing = u;
        if (closing < 0) continue;
        std::vector<int> cycle{s};
        auto rest = trace_back(search, closing);
        cycle.insert(cycle.end(), rest.begin(), rest.end());
        keep_better(best, best_count, {ObstacleKind::DirectedCycle, canonical_cycle(cycle)},
                    excluded);
        if (best_count == 0) return best;
      }
      return best;
  }
  return best;
}

}  // namespace essentia
