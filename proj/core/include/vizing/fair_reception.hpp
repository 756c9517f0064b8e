#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vizing/domination.hpp"
#include "vizing/graph.hpp"

namespace vizing {

struct FairCounterexample {
  /// Indices (0-based) of the chosen sets S_{i_1}..S_{i_l}.
  std::vector<std::size_t> chosen;
  /// An externally dominating set of minimum fair score for that choice.
  VertexSet d;
  std::size_t score = 0;
};

struct FairVerdict {
  bool verified = false;
  std::optional<FairCounterexample> counterexample;
};

/// Disjoint nonempty vertex sets S_1..S_k with leftover Z = V - ∪S_i.
///
/// The verified flag is written only by verify_fair_reception.
class FairReception {
 public:
  /// Throws DomainError if a set is empty, out of range, or overlaps another.
  FairReception(const Graph& g, std::vector<VertexSet> sets, std::string provenance = "user-supplied");

  const std::vector<VertexSet>& sets() const noexcept { return sets_; }
  const VertexSet& z() const noexcept { return z_; }
  std::size_t k() const noexcept { return sets_.size(); }
  const std::string& provenance() const noexcept { return provenance_; }
  bool verified() const noexcept { return verified_; }

 private:
  friend FairVerdict verify_fair_reception(const Graph&, FairReception&, const SearchBudget&);

  std::vector<VertexSet> sets_;
  VertexSet z_;
  std::string provenance_;
  bool verified_ = false;
};

/// D externally dominates A iff every vertex of A has a neighbor in D - A.
bool externally_dominates(const Graph& g, const VertexSet& d, const VertexSet& a);

/// |D ∩ Z| + Σ over sets meeting D of (|S_j ∩ D| - 1).
std::size_t fair_score(const FairReception& fr, const VertexSet& d);

/// Checks every choice of l sets (by increasing l, then lexicographically):
/// the minimum fair score over all D externally dominating their union must
/// be at least l. The first failing choice is reported. Records the verdict
/// on `fr`. Throws BudgetExhausted naming the choice reached.
FairVerdict verify_fair_reception(const Graph& g, FairReception& fr, const SearchBudget& budget = {});

/// BFS layering V_0..V_d from `origin`.
struct LevelSets {
  Vertex origin = 0;
  std::vector<VertexSet> levels;
};

/// Throws DomainError on a disconnected graph.
LevelSets build_level_sets(const Graph& g, Vertex origin);

/// Fair reception of size floor(d/3)+1 built from the level sets of the
/// lowest-index vertex of eccentricity d = diam(G):
///   d % 3 == 0:  V0∪V1, then triples, then V_{d-1}∪V_d   (d = 0: just V0)
///   d % 3 == 1:  V0∪V1, then triples through V_d
///   d % 3 == 2:  triples V0..V_d
/// The result is run through verify_fair_reception before it is returned.
FairReception level_set_fair_reception(const Graph& g, const SearchBudget& budget = {});

inline constexpr std::size_t kFairBruteForceMaxOrder = 7;

struct FairDominationResult {
  std::size_t gamma_f = 0;
  std::vector<VertexSet> witness;
};

/// gamma_F(G) by trying every family of disjoint nonempty vertex sets.
/// Throws SizeError above kFairBruteForceMaxOrder vertices.
FairDominationResult fair_domination_number_bruteforce(const Graph& g,
                                                       const SearchBudget& budget = {});

}  // namespace vizing
