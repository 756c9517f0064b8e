#include "vizing/product.hpp"

#include <string>
#include <vector>

#include "vizing/error.hpp"

namespace vizing {

Graph cartesian_product(const Graph& g, const Graph& h, std::size_t cap) {
  if (g.order() == 0 || h.order() == 0) throw DomainError("product factors must be nonempty");
  const std::size_t n = g.order() * h.order();
  if (n > cap) {
    throw SizeError("product has " + std::to_string(n) + " vertices, cap is " +
                    std::to_string(cap));
  }
  const std::size_t m = h.order();
  std::vector<Edge> edges;
  edges.reserve(g.order() * h.edge_count() + m * g.edge_count());
  for (auto [a, b] : g.edges()) {
    for (Vertex v = 0; v < m; ++v) edges.emplace_back(product_index(a, v, m), product_index(b, v, m));
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    for (auto [a, b] : h.edges()) edges.emplace_back(product_index(u, a, m), product_index(u, b, m));
  }
  return Graph::from_edges(n, edges);
}

}  // namespace vizing
