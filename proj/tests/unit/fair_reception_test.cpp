#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "oracles.hpp"
#include "vizing/domination.hpp"
#include "vizing/error.hpp"
#include "vizing/fair_reception.hpp"
#include "vizing/generators.hpp"
#include "vizing/metrics.hpp"

using namespace vizing;
using oracle::Mask;

namespace {

// Families of disjoint nonempty sets: every labeling of V by 0 (left in Z)
// or 1..k where set labels first appear in increasing order.
template <typename Fn>
void for_each_family(std::size_t n, Fn&& fn) {
  std::vector<std::size_t> label(n, 0);
  while (true) {
    std::size_t seen = 0;
    bool canonical = true;
    for (std::size_t v = 0; v < n && canonical; ++v) {
      if (label[v] == 0) continue;
      if (label[v] > seen + 1) canonical = false;
      seen = std::max(seen, label[v]);
    }
    if (canonical && seen > 0) {
      std::vector<Mask> sets(seen, 0);
      for (std::size_t v = 0; v < n; ++v) {
        if (label[v] > 0) sets[label[v] - 1] |= Mask{1} << v;
      }
      fn(sets);
    }
    std::size_t i = 0;
    while (i < n && label[i] == n) label[i++] = 0;
    if (i == n) return;
    ++label[i];
  }
}

// Independent fair-reception test: every nonempty choice of l sets must have
// minimum fair score >= l over external dominators of their union.
bool oracle_is_fair(const Graph& g, const std::vector<Mask>& sets) {
  const std::size_t k = sets.size();
  for (Mask choice = 1; choice < (Mask{1} << k); ++choice) {
    Mask a = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if ((choice >> j) & 1U) a |= sets[j];
    }
    auto best = oracle::brute_min_fair_score(g, sets, a);
    if (best && *best < static_cast<std::size_t>(std::popcount(choice))) return false;
  }
  return true;
}

FairReception make(const Graph& g, const std::vector<Mask>& sets) {
  std::vector<VertexSet> vs;
  for (Mask m : sets) {
    auto members = oracle::mask_members(m);
    vs.emplace_back(g.order(), std::span<const Vertex>(members));
  }
  return FairReception(g, std::move(vs));
}

std::vector<std::size_t> level_sizes(const LevelSets& ls) {
  std::vector<std::size_t> out;
  for (const auto& l : ls.levels) out.push_back(l.size());
  return out;
}

}  // namespace

TEST(FairReception, ExternalDomination) {
  EXPECT_TRUE(externally_dominates(path_graph(4), VertexSet(4, {1}), VertexSet(4)));
  EXPECT_TRUE(externally_dominates(cycle_graph(4), VertexSet(4, {1}), VertexSet(4, {0})));
  EXPECT_FALSE(externally_dominates(path_graph(4), VertexSet(4, {0, 1}), VertexSet(4, {0, 1})));
}

TEST(FairReception, ConstructorValidates) {
  Graph p4 = path_graph(4);
  EXPECT_THROW(FairReception(p4, {VertexSet(4)}), DomainError);
  EXPECT_THROW(FairReception(p4, {VertexSet(4, {0, 1}), VertexSet(4, {1})}), DomainError);
  EXPECT_THROW(FairReception(p4, {VertexSet(5, {4})}), DomainError);
  FairReception fr(p4, {VertexSet(4, {0}), VertexSet(4, {3})});
  EXPECT_EQ(fr.k(), 2U);
  EXPECT_EQ(fr.z(), VertexSet(4, {1, 2}));
  EXPECT_FALSE(fr.verified());
  EXPECT_EQ(fr.provenance(), "user-supplied");
}

TEST(FairReception, WholeVertexSetIsFair) {
  for (const auto& e : oracle::connected_corpus(1, 6)) {
    FairReception fr(e.graph, {e.graph.vertices()});
    EXPECT_TRUE(verify_fair_reception(e.graph, fr).verified) << e.id;
    EXPECT_TRUE(fr.verified());
  }
}

TEST(FairReception, PathSevenLevelSets) {
  Graph p7 = path_graph(7);
  FairReception fr(p7, {VertexSet(7, {0, 1}), VertexSet(7, {2, 3, 4}), VertexSet(7, {5, 6})});
  auto verdict = verify_fair_reception(p7, fr);
  EXPECT_TRUE(verdict.verified);
  EXPECT_FALSE(verdict.counterexample);
}

TEST(FairReception, CycleFourCounterexample) {
  Graph c4 = cycle_graph(4);
  FairReception fr(c4, {VertexSet(4, {0}), VertexSet(4, {2})});
  auto verdict = verify_fair_reception(c4, fr);
  EXPECT_FALSE(verdict.verified);
  EXPECT_FALSE(fr.verified());
  ASSERT_TRUE(verdict.counterexample);
  EXPECT_EQ(verdict.counterexample->chosen, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(verdict.counterexample->d, VertexSet(4, {1}));
  EXPECT_EQ(verdict.counterexample->score, 1U);
  EXPECT_EQ(fair_score(fr, VertexSet(4, {1})), 1U);
  EXPECT_EQ(fair_score(fr, VertexSet(4, {0, 1, 3})), 2U);
}

TEST(FairReception, VerifierMatchesOracle) {
  for (const auto& e : oracle::connected_corpus(1, 5)) {
    const Graph& g = e.graph;
    for_each_family(g.order(), [&](const std::vector<Mask>& sets) {
      FairReception fr = make(g, sets);
      auto verdict = verify_fair_reception(g, fr);
      ASSERT_EQ(verdict.verified, oracle_is_fair(g, sets)) << e.id;
      if (verdict.verified) return;
      ASSERT_TRUE(verdict.counterexample);
      const auto& cx = *verdict.counterexample;
      Mask a = 0;
      for (std::size_t j : cx.chosen) a |= sets[j];
      VertexSet union_set(g.order());
      for (Vertex v : oracle::mask_members(a)) union_set.insert(v);
      EXPECT_TRUE(externally_dominates(g, cx.d, union_set));
      EXPECT_EQ(cx.score, fair_score(fr, cx.d));
      EXPECT_LT(cx.score, cx.chosen.size());
      EXPECT_EQ(cx.score, *oracle::brute_min_fair_score(g, sets, a));
    });
  }
}

TEST(FairReception, LevelSetExamples) {
  EXPECT_EQ(level_sizes(build_level_sets(path_graph(4), 0)), (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(level_sizes(build_level_sets(star_graph(3), 0)), (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(level_sizes(build_level_sets(cycle_graph(6), 2)), (std::vector<std::size_t>{1, 2, 2, 1}));
  EXPECT_THROW(build_level_sets(Graph(2), 0), DomainError);
}

TEST(FairReception, LevelSetsPartitionAndLayer) {
  for (const auto& e : oracle::connected_corpus(1, 7)) {
    const Graph& g = e.graph;
    for (Vertex origin = 0; origin < g.order(); ++origin) {
      auto ls = build_level_sets(g, origin);
      ASSERT_EQ(ls.levels[0], VertexSet(g.order(), {origin}));
      EXPECT_EQ(ls.levels.size(), eccentricity(g, origin) + 1);
      VertexSet seen(g.order());
      std::vector<std::size_t> level_of(g.order());
      for (std::size_t i = 0; i < ls.levels.size(); ++i) {
        EXPECT_FALSE(ls.levels[i].empty());
        EXPECT_FALSE(seen.intersects(ls.levels[i]));
        seen |= ls.levels[i];
        ls.levels[i].for_each([&](Vertex v) { level_of[v] = i; });
      }
      EXPECT_EQ(seen, g.vertices());
      for (auto [u, v] : g.edges()) {
        EXPECT_LE(std::max(level_of[u], level_of[v]) - std::min(level_of[u], level_of[v]), 1U);
      }
    }
  }
}

TEST(FairReception, ConstructionExamples) {
  auto p7 = level_set_fair_reception(path_graph(7));
  EXPECT_TRUE(p7.verified());
  ASSERT_EQ(p7.k(), 3U);
  EXPECT_EQ(p7.sets()[0], VertexSet(7, {0, 1}));
  EXPECT_EQ(p7.sets()[1], VertexSet(7, {2, 3, 4}));
  EXPECT_EQ(p7.sets()[2], VertexSet(7, {5, 6}));

  auto p2 = level_set_fair_reception(path_graph(2));
  ASSERT_EQ(p2.k(), 1U);
  EXPECT_EQ(p2.sets()[0], VertexSet::full(2));

  auto p5 = level_set_fair_reception(path_graph(5));
  ASSERT_EQ(p5.k(), 2U);
  EXPECT_EQ(p5.sets()[0], VertexSet(5, {0, 1}));
  EXPECT_EQ(p5.sets()[1], VertexSet(5, {2, 3, 4}));

  auto k1 = level_set_fair_reception(Graph(1));
  EXPECT_EQ(k1.k(), 1U);
  EXPECT_TRUE(k1.verified());
}

TEST(FairReception, ConstructionSizeIdentity) {
  auto check = [](const Graph& g, const std::string& id) {
    auto fr = level_set_fair_reception(g);
    EXPECT_EQ(fr.k(), diameter(g) / 3 + 1) << id;
    EXPECT_TRUE(fr.verified()) << id;
    VertexSet all(g.order());
    for (const auto& s : fr.sets()) all |= s;
    EXPECT_EQ(all, g.vertices()) << id;
  };
  for (const auto& e : oracle::connected_corpus(1, 7)) check(e.graph, e.id);
  for (const auto& e : oracle::tree_corpus(1, 9)) check(e.graph, e.id);
  for (std::size_t n = 1; n <= 12; ++n) check(path_graph(n), "P" + std::to_string(n));
  for (std::size_t n = 3; n <= 12; ++n) check(cycle_graph(n), "C" + std::to_string(n));
}

TEST(FairReception, FairDominationExamples) {
  EXPECT_EQ(fair_domination_number_bruteforce(Graph(1)).gamma_f, 1U);
  EXPECT_EQ(fair_domination_number_bruteforce(complete_graph(3)).gamma_f, 1U);
  auto p4 = fair_domination_number_bruteforce(path_graph(4));
  EXPECT_EQ(p4.gamma_f, 2U);
  EXPECT_EQ(p4.witness.size(), 2U);
  EXPECT_THROW(fair_domination_number_bruteforce(path_graph(8)), SizeError);
}

TEST(FairReception, FairDominationMatchesOracle) {
  for (const auto& e : oracle::connected_corpus(1, 5)) {
    std::size_t best = 0;
    for_each_family(e.graph.order(), [&](const std::vector<Mask>& sets) {
      if (sets.size() > best && oracle_is_fair(e.graph, sets)) best = sets.size();
    });
    auto result = fair_domination_number_bruteforce(e.graph);
    EXPECT_EQ(result.gamma_f, best) << e.id;
    FairReception fr(e.graph, result.witness);
    EXPECT_TRUE(verify_fair_reception(e.graph, fr).verified) << e.id;
  }
}

TEST(FairReception, FairDominationAtMostGamma) {
  for (const auto& e : oracle::connected_corpus(1, 6)) {
    auto gf = fair_domination_number_bruteforce(e.graph).gamma_f;
    EXPECT_LE(gf, domination_number(e.graph).gamma) << e.id;
    EXPECT_GE(gf, level_set_fair_reception(e.graph).k()) << e.id;
  }
}
