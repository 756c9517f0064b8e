#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vizing/graph.hpp"

namespace vizing {

enum class Family { path, cycle, complete, star, complete_bipartite };

std::optional<Family> family_from_name(std::string_view name);
std::string_view family_name(Family f);

/// Canonical labelled member of a family:
///   path(n)     P_n, edges i~i+1
///   cycle(n)    C_n, n >= 3
///   complete(n) K_n
///   star(r)     K_{1,r}, center 0, leaves 1..r
///   complete_bipartite(a, b)  parts {0..a-1} and {a..a+b-1}
Graph generate(Family family, std::span<const std::size_t> params);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);

/// Parses "NAME:P1[,P2]" such as "path:6" or "complete_bipartite:2,3".
Graph generate_from_token(std::string_view token);

}  // namespace vizing
