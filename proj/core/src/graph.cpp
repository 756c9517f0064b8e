#include "vizing/graph.hpp"

#include <string>

#include "vizing/error.hpp"

namespace vizing {

Graph::Graph(std::size_t n) {
  open_.reserve(n);
  closed_.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    open_.emplace_back(n);
    closed_.emplace_back(n, std::initializer_list<Vertex>{v});
  }
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") out of range for " + std::to_string(n) + " vertices");
    }
    if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
    if (g.open_[u].contains(v)) {
      throw DomainError("repeated edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    g.open_[u].insert(v);
    g.open_[v].insert(u);
    g.closed_[u].insert(v);
    g.closed_[v].insert(u);
    ++g.edge_count_;
  }
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v = open_[u].next(u); v < order(); v = open_[u].next(v)) out.emplace_back(u, v);
  }
  return out;
}

VertexSet Graph::closed_neighborhood(const VertexSet& s) const {
  VertexSet out(order());
  s.for_each([&](Vertex v) { out |= closed_[v]; });
  return out;
}

bool Graph::dominates(const VertexSet& s) const {
  return closed_neighborhood(s).size() == order();
}

bool Graph::is_independent(const VertexSet& s) const {
  bool ok = true;
  s.for_each([&](Vertex v) { ok = ok && !open_[v].intersects(s); });
  return ok;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) edges.emplace_back(i, j);
    }
  }
  return from_edges(vertices.size(), edges);
}

}  // namespace vizing
