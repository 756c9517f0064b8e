#include "vizing/classify.hpp"

#include <string>

#include "vizing/error.hpp"
#include "vizing/generators.hpp"

namespace vizing {

namespace {

// Extends `chosen` to `target` members drawn from `candidates` in ascending
// order. With `independent` the members must be pairwise non-adjacent,
// otherwise pairwise adjacent.
bool extend_uniform(const Graph& g, std::vector<Vertex>& chosen, VertexSet candidates,
                    std::size_t target, bool independent) {
  if (chosen.size() == target) return true;
  if (chosen.size() + candidates.size() < target) return false;
  for (Vertex v = candidates.first(); v < g.order(); v = candidates.next(v)) {
    candidates.erase(v);
    VertexSet next = independent ? candidates - g.neighbors(v) : candidates & g.neighbors(v);
    chosen.push_back(v);
    if (extend_uniform(g, chosen, std::move(next), target, independent)) return true;
    chosen.pop_back();
  }
  return false;
}

// Grows a chordless path: each new vertex is adjacent to the current end and
// to no earlier vertex on the path.
bool extend_path(const Graph& g, std::vector<Vertex>& path, VertexSet& blocked,
                 std::size_t target) {
  if (path.size() == target) return true;
  VertexSet candidates = g.neighbors(path.back()) - blocked;
  for (Vertex w = candidates.first(); w < g.order(); w = candidates.next(w)) {
    // Everything adjacent to the old end (and the end itself) becomes
    // ineligible once we move past it.
    VertexSet saved = blocked;
    blocked |= g.closed_neighbors(path.back());
    path.push_back(w);
    if (extend_path(g, path, blocked, target)) return true;
    path.pop_back();
    blocked = std::move(saved);
  }
  return false;
}

}  // namespace

std::string Pattern::name() const {
  switch (kind) {
    case Kind::clique: return "K_" + std::to_string(param);
    case Kind::star: return "K_1," + std::to_string(param);
    case Kind::path: return "P_" + std::to_string(param);
  }
  return "?";
}

Graph Pattern::graph() const {
  switch (kind) {
    case Kind::clique: return complete_graph(param);
    case Kind::star: return star_graph(param);
    case Kind::path: return path_graph(param);
  }
  throw DomainError("unknown pattern");
}

std::optional<std::vector<Vertex>> has_induced(const Graph& g, Pattern pattern) {
  if (pattern.param < 2) throw DomainError(pattern.name() + ": pattern parameter must be >= 2");
  std::vector<Vertex> witness;
  switch (pattern.kind) {
    case Pattern::Kind::clique:
      if (extend_uniform(g, witness, g.vertices(), pattern.param, false)) return witness;
      return std::nullopt;
    case Pattern::Kind::star:
      for (Vertex c = 0; c < g.order(); ++c) {
        if (g.degree(c) < pattern.param) continue;
        witness.assign(1, c);
        if (extend_uniform(g, witness, g.neighbors(c), pattern.param + 1, true)) return witness;
      }
      return std::nullopt;
    case Pattern::Kind::path:
      for (Vertex s = 0; s < g.order(); ++s) {
        witness.assign(1, s);
        VertexSet blocked(g.order(), {s});
        if (extend_path(g, witness, blocked, pattern.param)) return witness;
      }
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::size_t> ClassProfile::smallest_k_free(std::size_t lo) const {
  for (auto [r, free] : k_free) {
    if (r >= lo && free) return r;
  }
  return std::nullopt;
}

std::optional<std::size_t> ClassProfile::smallest_star_free(std::size_t lo) const {
  for (auto [r, free] : star_free) {
    if (r >= lo && free) return r;
  }
  return std::nullopt;
}

ClassProfile classify(const Graph& g, std::size_t r_max) {
  if (r_max < 3) throw DomainError("r_max must be at least 3");
  ClassProfile profile;
  profile.r_max = r_max;

  // Each family is nested (K_{r+1} contains an induced K_r, and likewise for
  // stars and paths), so once a pattern is absent every larger one is too.
  auto fill = [&](std::map<std::size_t, bool>& verdicts, auto make, auto params) {
    bool free_below = false;
    for (std::size_t p : params) {
      if (free_below) {
        verdicts[p] = true;
        continue;
      }
      Pattern pattern = make(p);
      auto witness = has_induced(g, pattern);
      verdicts[p] = !witness.has_value();
      if (witness) profile.witnesses[pattern.name()] = std::move(*witness);
      free_below = verdicts[p];
    }
  };
  std::vector<std::size_t> rs;
  for (std::size_t r = 2; r <= r_max; ++r) rs.push_back(r);
  fill(profile.k_free, Pattern::clique, rs);
  fill(profile.star_free, Pattern::star, rs);
  fill(profile.path_free, Pattern::path, std::vector<std::size_t>(std::begin(kProfilePathLengths),
                                                                  std::end(kProfilePathLengths)));
  profile.triangle_free = profile.k_free.at(3);
  profile.claw_free = profile.star_free.at(3);
  return profile;
}

}  // namespace vizing
