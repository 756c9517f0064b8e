#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "vizing/vertex_set.hpp"

namespace vizing {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable finite simple undirected graph on vertices 0..n-1.
///
/// Every vertex carries both its open neighborhood N(v) and closed
/// neighborhood N[v] = N(v) + {v} as bitsets, since nearly every kernel in
/// this library is a union or intersection of neighborhoods. Loops and
/// repeated edges are rejected when the graph is built.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on `n` vertices.
  explicit Graph(std::size_t n);

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return open_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const noexcept { return open_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return open_.at(v); }
  const VertexSet& closed_neighbors(Vertex v) const { return closed_.at(v); }
  std::size_t degree(Vertex v) const { return open_.at(v).size(); }

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  /// Edges with u < v, sorted.
  std::vector<Edge> edges() const;

  /// N[S]: the union of closed neighborhoods of the members of `s`.
  VertexSet closed_neighborhood(const VertexSet& s) const;
  bool dominates(const VertexSet& s) const;
  bool is_independent(const VertexSet& s) const;

  /// Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
  Graph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  std::vector<VertexSet> open_;
  std::vector<VertexSet> closed_;
  std::size_t edge_count_ = 0;
};

}  // namespace vizing
