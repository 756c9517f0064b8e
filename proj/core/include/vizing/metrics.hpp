#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "vizing/graph.hpp"

namespace vizing {

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// BFS distances from `source`; unreachable vertices get kUnreachable.
std::vector<std::size_t> distances_from(const Graph& g, Vertex source);

bool is_connected(const Graph& g);

/// Greatest distance from `v`. Throws DomainError on a disconnected graph.
std::size_t eccentricity(const Graph& g, Vertex v);

/// max_v eccentricity(v). Throws DomainError on a disconnected or empty graph.
std::size_t diameter(const Graph& g);

}  // namespace vizing
