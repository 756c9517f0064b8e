#include "vizing/domination.hpp"

#include <algorithm>
#include <string>

#include "fixed_bits.hpp"
#include "vizing/error.hpp"
#include "vizing/metrics.hpp"

namespace vizing {

namespace {

using detail::Bits;

// Branch and bound over dominator choices. In minimize mode it searches for a
// dominating set strictly smaller than the incumbent; in enumerate mode it
// collects every dominating set of exactly `target` vertices.
//
// Sibling exclusion: after exploring "w_j is the next dominator", w_j is
// forbidden in the later siblings. A set D is then reached only through the
// first member of D ∩ N[u] in branch order, so enumeration never repeats a set.
template <std::size_t W>
class DominatorSearch {
 public:
  DominatorSearch(const Graph& g, const SearchBudget& budget, bool independent)
      : n_(g.order()),
        closed_(detail::closed_rows<W>(g)),
        open_(detail::open_rows<W>(g)),
        all_(Bits<W>::full(g.order())),
        independent_(independent),
        budget_(budget) {}

  std::vector<Vertex> greedy() const {
    std::vector<Vertex> picked;
    Bits<W> dominated;
    Bits<W> allowed = all_;
    while (dominated != all_) {
      Bits<W> undominated = all_ - dominated;
      std::size_t best_cover = 0;
      Vertex best = 0;
      allowed.for_each([&](std::size_t w) {
        std::size_t cover = closed_[w].count_and(undominated);
        if (cover > best_cover) {
          best_cover = cover;
          best = w;
        }
      });
      picked.push_back(best);
      dominated |= closed_[best];
      if (independent_) allowed = allowed - closed_[best];
    }
    return picked;
  }

  std::vector<Vertex> minimize() {
    enumerate_ = false;
    best_ = greedy();
    limit_ = best_.size() - 1;
    search(Bits<W>{}, Bits<W>{});
    std::sort(best_.begin(), best_.end());
    return best_;
  }

  std::vector<Bits<W>> enumerate(std::size_t target) {
    enumerate_ = true;
    limit_ = target;
    found_.clear();
    search(Bits<W>{}, Bits<W>{});
    return std::move(found_);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void search(const Bits<W>& dominated, const Bits<W>& forbidden) {
    if (++nodes_ > budget_.node_limit) {
      throw BudgetExhausted("domination search exceeded " + std::to_string(budget_.node_limit) +
                            " nodes on a " + std::to_string(n_) + "-vertex graph");
    }
    const std::size_t depth = chosen_.size();
    const Bits<W> undominated = all_ - dominated;
    if (undominated.none()) {
      record();
      return;
    }
    if (depth >= limit_) return;

    const Bits<W> allowed = all_ - forbidden;
    std::size_t max_cover = 0;
    allowed.for_each([&](std::size_t w) {
      max_cover = std::max(max_cover, closed_[w].count_and(undominated));
    });
    if (max_cover == 0) return;
    const std::size_t remaining = undominated.count();
    if (depth + (remaining + max_cover - 1) / max_cover > limit_) return;

    // Undominated vertex with the fewest eligible dominators.
    std::size_t pivot = n_;
    std::size_t pivot_choices = n_ + 1;
    undominated.for_each([&](std::size_t u) {
      std::size_t choices = closed_[u].count_and(allowed);
      if (choices < pivot_choices) {
        pivot_choices = choices;
        pivot = u;
      }
    });
    if (pivot_choices == 0) return;

    std::vector<std::pair<std::size_t, std::size_t>> order;  // (-cover, vertex)
    (closed_[pivot] & allowed).for_each([&](std::size_t w) {
      order.emplace_back(n_ - closed_[w].count_and(undominated), w);
    });
    std::sort(order.begin(), order.end());

    Bits<W> excluded = forbidden;
    for (auto [_, w] : order) {
      if (depth >= limit_) break;
      Bits<W> next_forbidden = excluded;
      next_forbidden.set(w);
      if (independent_) next_forbidden |= open_[w];
      chosen_.push_back(w);
      search(dominated | closed_[w], next_forbidden);
      chosen_.pop_back();
      excluded.set(w);
    }
  }

  void record() {
    if (enumerate_) {
      if (chosen_.size() != limit_) {
        throw IntegrityError("found a dominating set of size " + std::to_string(chosen_.size()) +
                                 " below the claimed minimum " + std::to_string(limit_),
                             "");
      }
      Bits<W> set;
      for (Vertex v : chosen_) set.set(v);
      found_.push_back(set);
      if (found_.size() > budget_.enumeration_cap) {
        throw CapExceeded("more than " + std::to_string(budget_.enumeration_cap) +
                          " minimum dominating sets");
      }
    } else if (chosen_.size() < best_.size()) {
      best_ = chosen_;
      limit_ = best_.size() - 1;
    }
  }

  std::size_t n_;
  std::vector<Bits<W>> closed_;
  std::vector<Bits<W>> open_;
  Bits<W> all_;
  bool independent_;
  SearchBudget budget_;

  bool enumerate_ = false;
  std::size_t limit_ = 0;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> chosen_;
  std::vector<Vertex> best_;
  std::vector<Bits<W>> found_;
};

void require_nonempty(const Graph& g) {
  if (g.order() == 0) throw DomainError("graph has no vertices");
}

std::vector<VertexSet> enumerate_with_gamma(const Graph& g, const SearchBudget& budget,
                                            std::size_t gamma) {
  auto sets = detail::with_width(g.order(), [&](auto width) {
    constexpr std::size_t W = decltype(width)::value;
    DominatorSearch<W> search(g, budget, false);
    std::vector<VertexSet> out;
    for (const auto& bits : search.enumerate(gamma)) out.push_back(detail::to_vertex_set(bits, g.order()));
    return out;
  });
  std::sort(sets.begin(), sets.end());
  return sets;
}

// Cliques of exactly `size` vertices in lexicographic order; stops when
// `accept` returns true.
template <typename Accept>
bool find_clique(const Graph& g, VertexSet& current, std::size_t have, const VertexSet& candidates,
                 std::size_t size, std::uint64_t& nodes, const SearchBudget& budget,
                 Accept&& accept) {
  if (++nodes > budget.node_limit) throw BudgetExhausted("dominating clique search exceeded budget");
  if (have == size) return accept(current);
  if (have + candidates.size() < size) return false;
  VertexSet rest = candidates;
  for (Vertex v = rest.first(); v < g.order(); v = rest.next(v)) {
    rest.erase(v);
    current.insert(v);
    if (find_clique(g, current, have + 1, rest & g.neighbors(v), size, nodes, budget, accept)) {
      return true;
    }
    current.erase(v);
  }
  return false;
}

}  // namespace

DominationCertificate domination_number(const Graph& g, const SearchBudget& budget,
                                        bool enumerate_all) {
  require_nonempty(g);
  auto best = detail::with_width(g.order(), [&](auto width) {
    constexpr std::size_t W = decltype(width)::value;
    return DominatorSearch<W>(g, budget, false).minimize();
  });
  DominationCertificate cert;
  cert.gamma = best.size();
  cert.one_gamma_set = VertexSet(g.order(), best);
  if (!g.dominates(cert.one_gamma_set)) {
    throw IntegrityError("solver returned a non-dominating set", "");
  }
  if (enumerate_all) cert.all_gamma_sets = enumerate_with_gamma(g, budget, cert.gamma);
  return cert;
}

std::vector<VertexSet> enumerate_gamma_sets(const Graph& g, const SearchBudget& budget) {
  return *domination_number(g, budget, true).all_gamma_sets;
}

std::size_t allegiance(const Graph& g, const VertexSet& d) {
  if (d.universe() != g.order() || !g.dominates(d)) {
    throw DomainError("allegiance is defined for dominating sets only");
  }
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, (g.closed_neighbors(v) & d).size());
  return best;
}

PowerResult power(const Graph& g, const SearchBudget& budget) {
  auto sets = enumerate_gamma_sets(g, budget);
  PowerResult result;
  result.gamma = sets.front().size();
  result.gamma_set_count = sets.size();
  result.power = result.gamma + 1;
  for (const auto& d : sets) {
    std::size_t a = allegiance(g, d);
    if (a < result.power) {
      result.power = a;
      result.witness = d;
    }
  }
  return result;
}

IndependentDomination independent_domination(const Graph& g, const SearchBudget& budget) {
  require_nonempty(g);
  auto best = detail::with_width(g.order(), [&](auto width) {
    constexpr std::size_t W = decltype(width)::value;
    return DominatorSearch<W>(g, budget, true).minimize();
  });
  IndependentDomination out{best.size(), VertexSet(g.order(), best)};
  if (!g.dominates(out.witness) || !g.is_independent(out.witness)) {
    throw IntegrityError("solver returned a set that is not independent dominating", "");
  }
  return out;
}

std::size_t independent_domination_number(const Graph& g, const SearchBudget& budget) {
  return independent_domination(g, budget).size;
}

std::optional<DominatingCliqueOrP3> dominating_clique_or_p3(const Graph& g,
                                                            const SearchBudget& budget) {
  require_nonempty(g);
  if (!is_connected(g)) throw DomainError("dominating clique-or-P3 search needs a connected graph");

  std::uint64_t nodes = 0;
  auto dominating = [&](const VertexSet& s) { return g.dominates(s); };
  for (std::size_t size = 1; size <= g.order(); ++size) {
    VertexSet current(g.order());
    bool any_clique = false;
    auto accept = [&](const VertexSet& s) {
      any_clique = true;
      return dominating(s);
    };
    if (find_clique(g, current, 0, g.vertices(), size, nodes, budget, accept)) {
      return DominatingCliqueOrP3{DominatingCliqueOrP3::Kind::clique, current};
    }
    if (size == 3) {
      for (Vertex b = 0; b < g.order(); ++b) {
        const auto& nb = g.neighbors(b);
        for (Vertex a = nb.first(); a < g.order(); a = nb.next(a)) {
          for (Vertex c = nb.next(a); c < g.order(); c = nb.next(c)) {
            if (g.adjacent(a, c)) continue;
            VertexSet p3(g.order(), {a, b, c});
            if (dominating(p3)) return DominatingCliqueOrP3{DominatingCliqueOrP3::Kind::p3, p3};
          }
        }
      }
    }
    if (!any_clique && size >= 3) break;
  }
  return std::nullopt;
}

VertexSet StructureDecomposition::cell(std::size_t i) const {
  VertexSet q = private_neighbors.at(i);
  q.insert(gamma_set.at(i));
  return q;
}

VertexSet StructureDecomposition::chamber(std::span<const std::size_t> indices) const {
  VertexSet out(order);
  for (std::size_t i : indices) out |= cell(i);
  for (const auto& [s, members] : shared) {
    bool inside = std::all_of(s.begin(), s.end(), [&](std::size_t j) {
      return std::find(indices.begin(), indices.end(), j) != indices.end();
    });
    if (inside) out |= members;
  }
  return out;
}

std::size_t StructureDecomposition::max_shared_arity() const {
  std::size_t arity = 1;
  for (const auto& [s, _] : shared) arity = std::max(arity, s.size());
  return arity;
}

StructureDecomposition decompose(const Graph& g, std::span<const Vertex> gamma_set) {
  VertexSet gamma(g.order());
  for (Vertex v : gamma_set) {
    if (gamma.contains(v)) throw DomainError("repeated vertex " + std::to_string(v) + " in Γ");
    gamma.insert(v);
  }
  if (!g.dominates(gamma)) throw DomainError("decompose needs a dominating set");

  StructureDecomposition out;
  out.order = g.order();
  out.gamma_set.assign(gamma_set.begin(), gamma_set.end());
  out.private_neighbors.assign(gamma_set.size(), VertexSet(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    if (gamma.contains(v)) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < gamma_set.size(); ++i) {
      if (g.adjacent(v, gamma_set[i])) s.push_back(i);
    }
    if (s.size() == 1) {
      out.private_neighbors[s.front()].insert(v);
    } else {
      auto [it, _] = out.shared.try_emplace(std::move(s), g.order());
      it->second.insert(v);
    }
  }
  return out;
}

}  // namespace vizing
