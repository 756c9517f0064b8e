#include "vizing/metrics.hpp"

#include <algorithm>
#include <string>

#include "vizing/error.hpp"

namespace vizing {

std::vector<std::size_t> distances_from(const Graph& g, Vertex source) {
  if (source >= g.order()) {
    throw DomainError("vertex " + std::to_string(source) + " out of range");
  }
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  dist[source] = 0;
  VertexSet frontier(g.order(), {source});
  VertexSet seen = frontier;
  for (std::size_t level = 1; !frontier.empty(); ++level) {
    VertexSet next(g.order());
    frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
    next -= seen;
    next.for_each([&](Vertex v) { dist[v] = level; });
    seen |= next;
    frontier = std::move(next);
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = distances_from(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kUnreachable; });
}

std::size_t eccentricity(const Graph& g, Vertex v) {
  auto dist = distances_from(g, v);
  auto worst = *std::max_element(dist.begin(), dist.end());
  if (worst == kUnreachable) throw DomainError("eccentricity undefined on a disconnected graph");
  return worst;
}

std::size_t diameter(const Graph& g) {
  if (g.order() == 0) throw DomainError("diameter of the empty graph is undefined");
  std::size_t d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, eccentricity(g, v));
  return d;
}

}  // namespace vizing
