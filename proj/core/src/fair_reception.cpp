#include "vizing/fair_reception.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fixed_bits.hpp"
#include "vizing/error.hpp"
#include "vizing/metrics.hpp"

namespace vizing {

namespace {

using detail::Bits;

constexpr std::size_t kNoOwner = std::numeric_limits<std::size_t>::max();

std::string describe_choice(const std::vector<std::size_t>& chosen) {
  std::string out = "{";
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (i > 0) out += ",";
    out += "S" + std::to_string(chosen[i] + 1);
  }
  return out + "}";
}

// Minimum fair score over sets D that externally dominate a union A of chosen
// sets. Only vertices outside A can dominate A externally and adding a vertex
// never lowers the score, so D ranges over subsets of V - A.
template <std::size_t W>
class FairScoreMinimizer {
 public:
  FairScoreMinimizer(const Graph& g, const FairReception& fr, const SearchBudget& budget)
      : n_(g.order()), open_(detail::open_rows<W>(g)), owner_(g.order(), kNoOwner),
        budget_(budget) {
    for (std::size_t j = 0; j < fr.k(); ++j) fr.sets()[j].for_each([&](Vertex v) { owner_[v] = j; });
    used_.assign(fr.k(), 0);
  }

  struct Result {
    std::size_t score;
    std::vector<Vertex> d;
  };

  std::optional<Result> minimize(const Bits<W>& a, const std::vector<std::size_t>& chosen) {
    chosen_ = &chosen;
    candidates_ = Bits<W>::full(n_) - a;
    best_score_ = std::numeric_limits<std::size_t>::max();
    best_.clear();
    d_.clear();
    search(a, 0, Bits<W>{});
    if (best_score_ == std::numeric_limits<std::size_t>::max()) return std::nullopt;
    return Result{best_score_, best_};
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  std::size_t cost(std::size_t x) const {
    std::size_t j = owner_[x];
    if (j == kNoOwner) return 1;
    return used_[j] > 0 ? 1 : 0;
  }

  void search(const Bits<W>& undominated, std::size_t score, Bits<W> excluded) {
    if (++nodes_ > budget_.node_limit) {
      throw BudgetExhausted("fair reception verification exceeded " +
                            std::to_string(budget_.node_limit) + " nodes at choice " +
                            describe_choice(*chosen_));
    }
    if (score >= best_score_) return;
    if (undominated.none()) {
      best_score_ = score;
      best_ = d_;
      return;
    }
    const Bits<W> allowed = candidates_ - excluded;
    std::size_t pivot = n_;
    std::size_t pivot_choices = n_ + 1;
    undominated.for_each([&](std::size_t v) {
      std::size_t choices = open_[v].count_and(allowed);
      if (choices < pivot_choices) {
        pivot_choices = choices;
        pivot = v;
      }
    });
    if (pivot_choices == 0) return;

    std::vector<std::pair<std::size_t, std::size_t>> order;  // (cost, vertex)
    (open_[pivot] & allowed).for_each([&](std::size_t x) { order.emplace_back(cost(x), x); });
    std::sort(order.begin(), order.end());
    for (auto [c, x] : order) {
      std::size_t owner = owner_[x];
      if (owner != kNoOwner) ++used_[owner];
      d_.push_back(x);
      Bits<W> next_excluded = excluded;
      next_excluded.set(x);
      search(undominated - open_[x], score + c, next_excluded);
      d_.pop_back();
      if (owner != kNoOwner) --used_[owner];
      excluded.set(x);
    }
  }

  std::size_t n_;
  std::vector<Bits<W>> open_;
  std::vector<std::size_t> owner_;
  SearchBudget budget_;

  const std::vector<std::size_t>* chosen_ = nullptr;
  Bits<W> candidates_;
  std::vector<std::size_t> used_;
  std::vector<Vertex> d_;
  std::vector<Vertex> best_;
  std::size_t best_score_ = 0;
  std::uint64_t nodes_ = 0;
};

// True if some vertex of `s` has every neighbor inside `s`: then no D can
// externally dominate any union containing s.
bool has_enclosed_vertex(const Graph& g, const VertexSet& s) {
  bool found = false;
  s.for_each([&](Vertex v) { found = found || g.neighbors(v).is_subset_of(s); });
  return found;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t k) {
  const std::size_t l = c.size();
  for (std::size_t i = l; i-- > 0;) {
    if (c[i] < k - l + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < l; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

FairReception::FairReception(const Graph& g, std::vector<VertexSet> sets, std::string provenance)
    : sets_(std::move(sets)), z_(g.vertices()), provenance_(std::move(provenance)) {
  VertexSet seen(g.order());
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    const auto& s = sets_[i];
    if (s.universe() != g.order()) {
      throw DomainError("set S" + std::to_string(i + 1) + " is over a universe of size " +
                        std::to_string(s.universe()) + ", graph has " + std::to_string(g.order()));
    }
    if (s.empty()) throw DomainError("set S" + std::to_string(i + 1) + " is empty");
    if (s.intersects(seen)) throw DomainError("set S" + std::to_string(i + 1) + " overlaps an earlier set");
    seen |= s;
  }
  z_ -= seen;
}

bool externally_dominates(const Graph& g, const VertexSet& d, const VertexSet& a) {
  const VertexSet outside = d - a;
  bool ok = true;
  a.for_each([&](Vertex v) { ok = ok && g.neighbors(v).intersects(outside); });
  return ok;
}

std::size_t fair_score(const FairReception& fr, const VertexSet& d) {
  std::size_t score = (d & fr.z()).size();
  for (const auto& s : fr.sets()) {
    std::size_t inside = (d & s).size();
    if (inside > 0) score += inside - 1;
  }
  return score;
}

FairVerdict verify_fair_reception(const Graph& g, FairReception& fr, const SearchBudget& budget) {
  if (fr.z().universe() != g.order()) throw DomainError("fair reception belongs to a different graph");
  const std::size_t k = fr.k();

  std::vector<bool> enclosed(k);
  for (std::size_t j = 0; j < k; ++j) enclosed[j] = has_enclosed_vertex(g, fr.sets()[j]);

  FairVerdict verdict{true, std::nullopt};
  if (std::find(enclosed.begin(), enclosed.end(), false) != enclosed.end()) {
    detail::with_width(g.order(), [&](auto width) {
      constexpr std::size_t W = decltype(width)::value;
      FairScoreMinimizer<W> minimizer(g, fr, budget);
      for (std::size_t l = 1; l <= k && verdict.verified; ++l) {
        std::vector<std::size_t> choice(l);
        for (std::size_t i = 0; i < l; ++i) choice[i] = i;
        do {
          bool vacuous = false;
          VertexSet a(g.order());
          for (std::size_t j : choice) {
            vacuous = vacuous || enclosed[j];
            a |= fr.sets()[j];
          }
          if (vacuous || has_enclosed_vertex(g, a)) continue;
          auto best = minimizer.minimize(detail::to_bits<W>(a), choice);
          if (best && best->score < l) {
            verdict.verified = false;
            verdict.counterexample =
                FairCounterexample{choice, VertexSet(g.order(), best->d), best->score};
            break;
          }
        } while (next_combination(choice, k));
      }
    });
  }
  fr.verified_ = verdict.verified;
  return verdict;
}

LevelSets build_level_sets(const Graph& g, Vertex origin) {
  auto dist = distances_from(g, origin);
  LevelSets out;
  out.origin = origin;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (dist[v] == kUnreachable) throw DomainError("level sets need a connected graph");
    if (dist[v] >= out.levels.size()) out.levels.resize(dist[v] + 1, VertexSet(g.order()));
    out.levels[dist[v]].insert(v);
  }
  return out;
}

FairReception level_set_fair_reception(const Graph& g, const SearchBudget& budget) {
  const std::size_t d = diameter(g);
  Vertex origin = 0;
  while (eccentricity(g, origin) != d) ++origin;
  const LevelSets layers = build_level_sets(g, origin);

  // Group sizes over V_0..V_d; they always sum to d + 1.
  std::vector<std::size_t> groups;
  switch (d % 3) {
    case 0:
      if (d == 0) {
        groups = {1};
      } else {
        groups.push_back(2);
        groups.insert(groups.end(), (d - 3) / 3, 3);
        groups.push_back(2);
      }
      break;
    case 1:
      groups.push_back(2);
      groups.insert(groups.end(), (d - 1) / 3, 3);
      break;
    default:
      groups.assign((d + 1) / 3, 3);
      break;
  }

  std::vector<VertexSet> sets;
  std::size_t level = 0;
  for (std::size_t size : groups) {
    VertexSet s(g.order());
    for (std::size_t i = 0; i < size; ++i) s |= layers.levels.at(level++);
    sets.push_back(std::move(s));
  }
  FairReception fr(g, std::move(sets), "level-set:d%3=" + std::to_string(d % 3));
  auto verdict = verify_fair_reception(g, fr, budget);
  if (!verdict.verified) {
    throw IntegrityError("level-set fair reception failed verification",
                         "choice " + describe_choice(verdict.counterexample->chosen));
  }
  return fr;
}

FairDominationResult fair_domination_number_bruteforce(const Graph& g, const SearchBudget& budget) {
  const std::size_t n = g.order();
  if (n == 0) throw DomainError("graph has no vertices");
  if (n > kFairBruteForceMaxOrder) {
    throw SizeError("brute-force fair domination supports at most " +
                    std::to_string(kFairBruteForceMaxOrder) + " vertices, got " + std::to_string(n));
  }

  // label[v] = 0 puts v in Z, label[v] = j >= 1 puts it in S_j. Labels are
  // restricted-growth so each family is visited once.
  FairDominationResult best;
  std::vector<std::size_t> label(n, 0);
  auto visit = [&](auto&& self, Vertex v, std::size_t blocks) -> void {
    if (blocks + (n - v) <= best.gamma_f) return;
    if (v == n) {
      std::vector<VertexSet> sets(blocks, VertexSet(n));
      for (Vertex u = 0; u < n; ++u) {
        if (label[u] > 0) sets[label[u] - 1].insert(u);
      }
      FairReception fr(g, sets);
      if (verify_fair_reception(g, fr, budget).verified) {
        best.gamma_f = blocks;
        best.witness = std::move(sets);
      }
      return;
    }
    for (std::size_t j = 0; j <= blocks + 1; ++j) {
      label[v] = j;
      self(self, v + 1, std::max(blocks, j));
    }
    label[v] = 0;
  };
  visit(visit, 0, 0);
  return best;
}

}  // namespace vizing
