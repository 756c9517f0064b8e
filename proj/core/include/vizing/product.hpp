#pragma once

#include <cstddef>

#include "vizing/graph.hpp"

namespace vizing {

inline constexpr std::size_t kDefaultProductCap = 1024;

/// Index of the pair (g_vertex, h_vertex) in G □ H: row-major, g_vertex * |V(H)| + h_vertex.
inline Vertex product_index(Vertex g_vertex, Vertex h_vertex, std::size_t h_order) {
  return g_vertex * h_order + h_vertex;
}

/// Cartesian product G □ H. (u1,v1) ~ (u2,v2) iff u1 = u2 and v1 ~ v2 in H, or
/// v1 = v2 and u1 ~ u2 in G. Throws SizeError when |V(G)||V(H)| exceeds `cap`.
Graph cartesian_product(const Graph& g, const Graph& h, std::size_t cap = kDefaultProductCap);

}  // namespace vizing
