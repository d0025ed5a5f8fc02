#include "essentia/separator.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>

#include "essentia/errors.hpp"

namespace essentia {

namespace {

// Dinic on an explicit residual graph; capacities are small integers.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(static_cast<std::size_t>(nodes)) {}

  void add_arc(int from, int to, std::int64_t cap) {
    head_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap});
    head_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
  }

  std::int64_t max_flow(int source, int sink, std::int64_t limit) {
    std::int64_t total = 0;
    while (total < limit && build_levels(source, sink)) {
      cursor_.assign(head_.size(), 0);
      while (std::int64_t pushed = augment(source, sink, limit - total)) {
        total += pushed;
        if (total >= limit) break;
      }
    }
    return total;
  }

  std::vector<char> reachable_from(int source) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack{source};
    seen[source] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int id : head_[u])
        if (arcs_[id].cap > 0 && !seen[arcs_[id].to]) {
          seen[arcs_[id].to] = 1;
          stack.push_back(arcs_[id].to);
        }
    }
    return seen;
  }

 private:
  struct ResidualArc {
    int to;
    std::int64_t cap;
  };

  bool build_levels(int source, int sink) {
    level_.assign(head_.size(), -1);
    std::queue<int> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int id : head_[u])
        if (arcs_[id].cap > 0 && level_[arcs_[id].to] < 0) {
          level_[arcs_[id].to] = level_[u] + 1;
          queue.push(arcs_[id].to);
        }
    }
    return level_[sink] >= 0;
  }

  std::int64_t augment(int u, int sink, std::int64_t bound) {
    if (u == sink) return bound;
    for (auto& i = cursor_[u]; i < head_[u].size(); ++i) {
      int id = head_[u][i];
      auto& arc = arcs_[id];
      if (arc.cap <= 0 || level_[arc.to] != level_[u] + 1) continue;
      if (std::int64_t pushed = augment(arc.to, sink, std::min(bound, arc.cap))) {
        arc.cap -= pushed;
        arcs_[id ^ 1].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> head_;
  std::vector<ResidualArc> arcs_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace

VertexSet min_vertex_separator(const Graph& g, std::span<const int> sources,
                               std::span<const int> targets, std::span<const int> forbidden) {
  const int n = g.num_vertices();
  const std::int64_t unbounded = n + 1;
  std::vector<char> is_forbidden(static_cast<std::size_t>(n), 0);
  for (int f : forbidden) is_forbidden[f] = 1;

  // u_in = 2u, u_out = 2u + 1, super source 2n, super sink 2n + 1.
  const int super_source = 2 * n;
  const int super_sink = 2 * n + 1;
  FlowNetwork net(2 * n + 2);
  for (int u = 0; u < n; ++u) {
    net.add_arc(2 * u, 2 * u + 1, is_forbidden[u] ? unbounded : 1);
    for (int y : g.out_neighbors(u)) net.add_arc(2 * u + 1, 2 * y, unbounded);
  }
  for (int s : sources) net.add_arc(super_source, 2 * s, unbounded);
  for (int t : targets) net.add_arc(2 * t + 1, super_sink, unbounded);

  const std::int64_t flow = net.max_flow(super_source, super_sink, unbounded);
  if (flow >= unbounded)
    throw SeparatorInfeasible("every separator would need a forbidden vertex");

  const auto reach = net.reachable_from(super_source);
  VertexSet cut;
  for (int u = 0; u < n; ++u)
    if (reach[2 * u] && !reach[2 * u + 1]) cut.push_back(u);
  if (static_cast<std::int64_t>(cut.size()) != flow)
    throw Error("min_vertex_separator: cut size differs from flow value");
  return cut;
}

}  // namespace essentia
