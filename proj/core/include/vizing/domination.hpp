#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "vizing/graph.hpp"

namespace vizing {

/// Limits for the exponential searches. Exceeding `node_limit` raises
/// BudgetExhausted and exceeding `enumeration_cap` raises CapExceeded; no
/// search ever returns a partial answer as if it were exact.
struct SearchBudget {
  std::uint64_t node_limit = 200'000'000;
  std::size_t enumeration_cap = 1'000'000;
};

struct DominationCertificate {
  std::size_t gamma = 0;
  VertexSet one_gamma_set;
  /// Every gamma-set in lexicographic order, when enumeration was requested.
  std::optional<std::vector<VertexSet>> all_gamma_sets;
};

/// Exact domination number by branch and bound.
///
/// Branches on the undominated vertex with the smallest closed neighborhood
/// (lowest index on ties), trying each member of that neighborhood as the
/// next dominator. Pruned with ceil(undominated / best single coverage)
/// against a greedy incumbent.
DominationCertificate domination_number(const Graph& g, const SearchBudget& budget = {},
                                        bool enumerate_all = false);

/// All dominating sets of size exactly gamma(G), deduplicated, lexicographic.
std::vector<VertexSet> enumerate_gamma_sets(const Graph& g, const SearchBudget& budget = {});

/// a_G(D) = max over v of |D ∩ N[v]|. Throws DomainError if D does not dominate g.
std::size_t allegiance(const Graph& g, const VertexSet& d);

struct PowerResult {
  std::size_t power = 0;
  std::size_t gamma = 0;
  /// A gamma-set of minimum allegiance (lexicographically first).
  VertexSet witness;
  std::size_t gamma_set_count = 0;
};

/// pi(G): minimum allegiance over all gamma-sets (independent or not).
PowerResult power(const Graph& g, const SearchBudget& budget = {});

struct IndependentDomination {
  std::size_t size = 0;
  VertexSet witness;
};

/// i(G) with a minimum independent dominating set.
IndependentDomination independent_domination(const Graph& g, const SearchBudget& budget = {});
std::size_t independent_domination_number(const Graph& g, const SearchBudget& budget = {});

struct DominatingCliqueOrP3 {
  enum class Kind { clique, p3 };
  Kind kind;
  VertexSet witness;
};

/// A dominating set inducing a complete graph or an induced P_3, searching by
/// ascending cardinality (cliques before P_3 at size three), so a returned
/// clique is a smallest dominating clique. nullopt when none exists.
/// Throws DomainError on a disconnected graph.
std::optional<DominatingCliqueOrP3> dominating_clique_or_p3(const Graph& g,
                                                            const SearchBudget& budget = {});

/// Partition of V(G) relative to an ordered dominating set Γ = (v_0..v_{k-1}).
///
/// private_neighbors[i] is P_i: the vertices outside Γ whose only Γ-neighbor
/// is v_i. shared maps an index set S (sorted, |S| >= 2) to P_S: the vertices
/// outside Γ whose Γ-neighbors are exactly {v_i : i in S}. Only nonempty P_S
/// are stored.
struct StructureDecomposition {
  std::size_t order = 0;
  std::vector<Vertex> gamma_set;
  std::vector<VertexSet> private_neighbors;
  std::map<std::vector<std::size_t>, VertexSet> shared;

  /// Q_i = {v_i} ∪ P_i.
  VertexSet cell(std::size_t i) const;
  /// Q_I together with every P_S for S ⊆ I.
  VertexSet chamber(std::span<const std::size_t> indices) const;
  /// max |S| over nonempty P_S, 1 if there are none.
  std::size_t max_shared_arity() const;
};

/// Throws DomainError if `gamma_set` repeats a vertex or does not dominate g.
StructureDecomposition decompose(const Graph& g, std::span<const Vertex> gamma_set);

}  // namespace vizing
