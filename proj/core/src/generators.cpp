#include "vizing/generators.hpp"

#include <charconv>
#include <string>

#include "vizing/error.hpp"

namespace vizing {

namespace {

void require_positive(std::size_t value, std::string_view what) {
  if (value == 0) throw DomainError(std::string(what) + " must be positive");
}

}  // namespace

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "star") return Family::star;
  if (name == "complete_bipartite") return Family::complete_bipartite;
  return std::nullopt;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::star: return "star";
    case Family::complete_bipartite: return "complete_bipartite";
  }
  return "unknown";
}

Graph path_graph(std::size_t n) {
  require_positive(n, "path order");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw DomainError("cycle order must be at least 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, n - 1);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  require_positive(n, "complete graph order");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) {
  require_positive(leaves, "star leaf count");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  require_positive(a, "bipartite part size");
  require_positive(b, "bipartite part size");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(a + b, edges);
}

Graph generate(Family family, std::span<const std::size_t> params) {
  const std::size_t expected = family == Family::complete_bipartite ? 2 : 1;
  if (params.size() != expected) {
    throw DomainError(std::string(family_name(family)) + " takes " + std::to_string(expected) +
                      " parameter(s), got " + std::to_string(params.size()));
  }
  switch (family) {
    case Family::path: return path_graph(params[0]);
    case Family::cycle: return cycle_graph(params[0]);
    case Family::complete: return complete_graph(params[0]);
    case Family::star: return star_graph(params[0]);
    case Family::complete_bipartite: return complete_bipartite_graph(params[0], params[1]);
  }
  throw DomainError("unknown family");
}

Graph generate_from_token(std::string_view token) {
  auto colon = token.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError(token.size(), "generator token must look like NAME:PARAMS");
  }
  auto family = family_from_name(token.substr(0, colon));
  if (!family) throw ParseError(0, "unknown generator '" + std::string(token.substr(0, colon)) + "'");

  std::vector<std::size_t> params;
  std::size_t pos = colon + 1;
  while (true) {
    auto comma = token.find(',', pos);
    auto piece = token.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                   : comma - pos);
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || end != piece.data() + piece.size() || piece.empty()) {
      throw ParseError(pos, "bad generator parameter '" + std::string(piece) + "'");
    }
    params.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return generate(*family, params);
}

}  // namespace vizing
