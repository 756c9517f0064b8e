#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vizing/graph.hpp"

namespace vizing {

/// One of the small forbidden patterns: K_r, K_{1,r}, or the path P_k on k vertices.
struct Pattern {
  enum class Kind { clique, star, path };

  Kind kind;
  std::size_t param;

  static Pattern clique(std::size_t r) { return {Kind::clique, r}; }
  static Pattern star(std::size_t r) { return {Kind::star, r}; }
  static Pattern path(std::size_t k) { return {Kind::path, k}; }

  std::size_t order() const { return kind == Kind::star ? param + 1 : param; }
  /// "K_4", "K_1,3", "P_5".
  std::string name() const;
  /// The pattern as a graph, labelled the way witnesses are ordered.
  Graph graph() const;
};

/// An ordered vertex tuple of `g` inducing exactly `pattern`, or nullopt.
///
/// Witness order: cliques ascending; stars center first then leaves
/// ascending; paths in path order. Throws DomainError if param < 2.
std::optional<std::vector<Vertex>> has_induced(const Graph& g, Pattern pattern);

inline constexpr std::size_t kDefaultRMax = 6;

/// Verdicts for every forbidden-subgraph class the bounds quantify over.
///
/// k_free and star_free are filled for r in [2, r_max], path_free for k in
/// {4, 5, 6}. Each false verdict has a witness keyed by Pattern::name().
struct ClassProfile {
  std::size_t r_max = kDefaultRMax;
  bool triangle_free = false;
  bool claw_free = false;
  std::map<std::size_t, bool> k_free;
  std::map<std::size_t, bool> star_free;
  std::map<std::size_t, bool> path_free;
  std::map<std::string, std::vector<Vertex>> witnesses;

  /// Smallest r in [lo, r_max] with the predicate true, if any.
  std::optional<std::size_t> smallest_k_free(std::size_t lo = 2) const;
  std::optional<std::size_t> smallest_star_free(std::size_t lo = 2) const;
};

inline constexpr std::size_t kProfilePathLengths[] = {4, 5, 6};

ClassProfile classify(const Graph& g, std::size_t r_max = kDefaultRMax);

}  // namespace vizing
