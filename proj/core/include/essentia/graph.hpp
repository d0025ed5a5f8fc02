#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "essentia/rational.hpp"

namespace essentia {

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

using Arc = std::pair<int, int>;

/// Simple graph on vertices 0..n-1. Undirected graphs store every edge in
/// both adjacency lists. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidInput on out-of-range endpoints, self-loops or duplicate
  /// arcs (for undirected graphs {u,v} and {v,u} count as duplicates).
  Graph(int n, bool directed, std::span<const Arc> arcs);

  int num_vertices() const { return n_; }
  bool directed() const { return directed_; }

  std::span<const int> out_neighbors(int u) const { return out_[u]; }
  std::span<const int> in_neighbors(int u) const { return in_[u]; }

  bool has_arc(int u, int v) const {
    return adjacency_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  /// Adjacency ignoring direction.
  bool adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }

  /// Directed: every arc. Undirected: every edge once with first < second.
  /// Lexicographically sorted in both cases.
  std::vector<Arc> arcs() const;
  std::size_t num_arcs() const;

  /// Directed copy with both orientations of every edge (no-op if directed).
  Graph bidirected() const;

  /// Subgraph induced by `keep`; vertex keep[i] becomes i.
  Graph induced(std::span<const int> keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.directed_ == b.directed_ && a.out_ == b.out_;
  }

 private:
  int n_ = 0;
  bool directed_ = false;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<std::uint8_t> adjacency_;
};

/// Per-vertex weights in [0, 1].
class VertexWeights {
 public:
  VertexWeights() = default;
  explicit VertexWeights(int n) : values_(static_cast<std::size_t>(n), Rational(0)) {}
  /// Throws InvalidInput if any entry lies outside [0, 1].
  explicit VertexWeights(std::vector<Rational> values);

  int size() const { return static_cast<int>(values_.size()); }
  const Rational& operator[](int u) const { return values_[u]; }
  /// Throws InvalidInput if the value lies outside [0, 1].
  void set(int u, Rational value);

  Rational total() const;
  std::span<const Rational> values() const { return values_; }

  friend bool operator==(const VertexWeights&, const VertexWeights&) = default;

 private:
  std::vector<Rational> values_;
};

/// Simple path (or cycle, listed once without repeating the start).
struct Path {
  std::vector<int> vertices;

  std::size_t size() const { return vertices.size(); }
  Rational weight(const VertexWeights& w) const;
  friend bool operator==(const Path&, const Path&) = default;
};

/// Sorts and deduplicates.
VertexSet make_vertex_set(std::vector<int> vertices);

bool contains(const VertexSet& set, int v);

}  // namespace essentia
