#include "essentia/graph.hpp"

#include <algorithm>
#include <string>

#include "essentia/errors.hpp"

namespace essentia {

Graph::Graph(int n, bool directed, std::span<const Arc> arcs)
    : n_(n),
      directed_(directed),
      out_(static_cast<std::size_t>(std::max(n, 0))),
      in_(static_cast<std::size_t>(std::max(n, 0))),
      adjacency_(static_cast<std::size_t>(std::max(n, 0)) * std::max(n, 0), 0) {
  if (n < 0) throw InvalidInput("negative vertex count");
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    auto [u, v] = arcs[i];
    const std::string where = "arc " + std::to_string(i) + " (" + std::to_string(u) +
                              "," + std::to_string(v) + ")";
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InvalidInput(where + ": vertex out of range [0, " + std::to_string(n) + ")");
    if (u == v) throw InvalidInput(where + ": self-loop");
    if (has_arc(u, v) || (!directed && has_arc(v, u)))
      throw InvalidInput(where + ": duplicate");
    adjacency_[static_cast<std::size_t>(u) * n_ + v] = 1;
    out_[u].push_back(v);
    in_[v].push_back(u);
    if (!directed) {
      adjacency_[static_cast<std::size_t>(v) * n_ + u] = 1;
      out_[v].push_back(u);
      in_[u].push_back(v);
    }
  }
  for (auto& list : out_) std::sort(list.begin(), list.end());
  for (auto& list : in_) std::sort(list.begin(), list.end());
}

std::vector<Arc> Graph::arcs() const {
  std::vector<Arc> result;
  for (int u = 0; u < n_; ++u)
    for (int v : out_[u])
      if (directed_ || u < v) result.emplace_back(u, v);
  return result;
}

std::size_t Graph::num_arcs() const {
  std::size_t total = 0;
  for (const auto& list : out_) total += list.size();
  return directed_ ? total : total / 2;
}

Graph Graph::bidirected() const {
  if (directed_) return *this;
  std::vector<Arc> both;
  for (int u = 0; u < n_; ++u)
    for (int v : out_[u]) both.emplace_back(u, v);
  return Graph(n_, true, both);
}

Graph Graph::induced(std::span<const int> keep) const {
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  std::vector<Arc> sub;
  for (int u : keep)
    for (int v : out_[u])
      if (index[v] >= 0 && (directed_ || u < v)) sub.emplace_back(index[u], index[v]);
  return Graph(static_cast<int>(keep.size()), directed_, sub);
}

VertexWeights::VertexWeights(std::vector<Rational> values) : values_(std::move(values)) {
  for (std::size_t u = 0; u < values_.size(); ++u) {
    values_[u].canonicalize();
    if (values_[u] < 0 || values_[u] > 1)
      throw InvalidInput("weight of vertex " + std::to_string(u) + " outside [0, 1]");
  }
}

void VertexWeights::set(int u, Rational value) {
  value.canonicalize();
  if (value < 0 || value > 1)
    throw InvalidInput("weight of vertex " + std::to_string(u) + " outside [0, 1]");
  values_[u] = std::move(value);
}

Rational VertexWeights::total() const {
  Rational sum = 0;
  for (const auto& x : values_) sum += x;
  return sum;
}

Rational Path::weight(const VertexWeights& w) const {
  Rational sum = 0;
  for (int u : vertices) sum += w[u];
  return sum;
}

VertexSet make_vertex_set(std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

bool contains(const VertexSet& set, int v) {
  return std::binary_search(set.begin(), set.end(), v);
}

}  // namespace essentia
