#include <gtest/gtest.h>

#include <string>

#include "oracles.hpp"
#include "vizing/bounds.hpp"
#include "vizing/error.hpp"
#include "vizing/generators.hpp"
#include "vizing/graph6.hpp"
#include "vizing/serialize.hpp"

using namespace vizing;

TEST(Bounds, SuenTarr) {
  EXPECT_EQ(suen_tarr_bound(2, 2), Rational(3));
  EXPECT_EQ(suen_tarr_bound(1, 1), Rational(1));
  EXPECT_EQ(suen_tarr_bound(3, 2), Rational(4));
  EXPECT_EQ(suen_tarr_bound(3, 3), Rational(6));
  EXPECT_EQ(suen_tarr_bound(2, 3), Rational(4));
}

TEST(Bounds, Power) {
  EXPECT_EQ(power_bound(1, 3, 5), Rational(15));
  EXPECT_EQ(power_bound(2, 2, 2), Rational(8, 3));
  EXPECT_EQ(power_bound(3, 3, 3), Rational(27, 5));
  EXPECT_THROW(power_bound(0, 1, 1), DomainError);
  for (std::size_t pi = 1; pi <= 6; ++pi) {
    for (std::size_t gg = 1; gg <= 6; ++gg) {
      EXPECT_GE(power_bound(pi, gg, 3), Rational(static_cast<std::int64_t>(gg * 3), 2));
    }
  }
}

TEST(Bounds, DiameterAndFair) {
  EXPECT_EQ(diameter_bound(6, 2), Rational(6));
  EXPECT_EQ(diameter_bound(1, 3), Rational(3));
  EXPECT_EQ(diameter_bound(4, 1), Rational(2));
  EXPECT_EQ(fair_bound(2, 1, 3, 2), Rational(4));
  EXPECT_EQ(fair_bound(2, 2, 3, 1), Rational(6));
}

TEST(Bounds, SqrtDeficit) {
  // (g - sqrt g) h with g = 4, h = 3 is 6.
  EXPECT_TRUE(sqrt_deficit_satisfied(4, 3, 6));
  EXPECT_FALSE(sqrt_deficit_satisfied(4, 3, 5));
  // g = 2, h = 2: (2 - 1.414..) * 2 = 1.17..
  EXPECT_TRUE(sqrt_deficit_satisfied(2, 2, 2));
  EXPECT_FALSE(sqrt_deficit_satisfied(2, 2, 1));
  EXPECT_TRUE(sqrt_deficit_satisfied(1, 5, 0));
}

TEST(Bounds, ClassRows) {
  auto c5 = class_bounds(classify(cycle_graph(5)), 2, 2);
  ASSERT_EQ(c5.size(), 2U);
  EXPECT_EQ(c5[0].name, "corollary_triangle_star");
  EXPECT_TRUE(c5[0].applicable);
  EXPECT_EQ(*c5[0].value, Rational(12, 5));

  // C_4 is K_3-free and P_5-free; r is raised to 4.
  auto c4 = class_bounds(classify(cycle_graph(4)), 2, 2);
  EXPECT_TRUE(c4[1].applicable);
  EXPECT_EQ(*c4[1].value, Rational(12, 5));

  auto k3 = class_bounds(classify(complete_graph(3)), 1, 2);
  EXPECT_FALSE(k3[0].applicable);
  EXPECT_FALSE(k3[0].value);
}

TEST(Bounds, TorusPair) {
  auto report = check_pair(cycle_graph(4), cycle_graph(4));
  EXPECT_EQ(report.g_id, "Cl");
  ASSERT_TRUE(report.gamma_product);
  EXPECT_EQ(*report.gamma_product, 4U);
  EXPECT_EQ(*report.find("suen_tarr")->value, Rational(3));
  EXPECT_TRUE(report.find("suen_tarr")->satisfied);
  EXPECT_EQ(*report.find("power")->value, Rational(8, 3));
  EXPECT_TRUE(report.find("power")->satisfied);
  EXPECT_EQ(*report.vizing_ratio, Rational(1));
  EXPECT_TRUE(report.exact);
  EXPECT_EQ(report.find("sqrt_deficit"), nullptr);
}

TEST(Bounds, IdentityFactor) {
  for (const auto& e : oracle::connected_corpus(1, 5)) {
    auto report = check_pair(Graph(1), e.graph);
    EXPECT_EQ(*report.gamma_product, report.gamma_h);
    EXPECT_EQ(*report.vizing_ratio, Rational(1));
    const Rational gh(static_cast<std::int64_t>(report.gamma_h));
    for (const char* name : {"power", "diameter", "vizing"}) {
      EXPECT_EQ(*report.find(name)->value, gh) << name << " " << e.id;
    }
    // Suen-Tarr does not collapse: (gamma(H) + 1) / 2.
    EXPECT_EQ(*report.find("suen_tarr")->value, (gh + 1) / 2) << e.id;
  }
}

TEST(Bounds, GridPairClawP6) {
  auto report = check_pair(path_graph(4), path_graph(4));
  const BoundRow* row = report.find("claw_p6");
  ASSERT_NE(row, nullptr);
  EXPECT_TRUE(row->applicable);
  EXPECT_EQ(*row->value, Rational(4));
  EXPECT_TRUE(row->satisfied);
  EXPECT_EQ(*report.gamma_product, 4U);
}

TEST(Bounds, OptionalRows) {
  PairOptions options;
  options.with_fair = true;
  options.assert_sqrt_deficit_class = true;
  auto report = check_pair(path_graph(4), cycle_graph(5), options, "g", "h");
  EXPECT_EQ(report.g_id, "g");
  EXPECT_EQ(*report.gamma_f_g, 2U);
  EXPECT_TRUE(report.find("fair")->applicable);
  EXPECT_TRUE(report.find("fair")->satisfied);
  const BoundRow* ck = report.find("sqrt_deficit");
  ASSERT_NE(ck, nullptr);
  EXPECT_EQ(ck->kind, BoundKind::informational);
  EXPECT_FALSE(ck->value);
  EXPECT_TRUE(ck->satisfied);
}

TEST(Bounds, BudgetMarksInexact) {
  PairOptions options;
  options.budget.node_limit = 40;
  auto report = check_pair(path_graph(7), path_graph(7), options);
  EXPECT_FALSE(report.exact);
  EXPECT_FALSE(report.gamma_product);
  EXPECT_FALSE(report.notes.empty());
  EXPECT_FALSE(report.worst_proven_margin());
}

TEST(Bounds, ProductCap) {
  PairOptions options;
  options.product_cap = 10;
  EXPECT_THROW(check_pair(path_graph(4), path_graph(4), options), SizeError);
}

TEST(Bounds, ReportSerialization) {
  auto report = check_pair(cycle_graph(4), cycle_graph(4));
  Json j = to_json(report);
  EXPECT_EQ(j["gamma_product"], 4);
  EXPECT_EQ(j["vizing_ratio"], "1");
  bool saw_power = false;
  for (const auto& row : j["bounds"]) {
    if (row["name"] == "power") {
      saw_power = true;
      EXPECT_EQ(row["value"], "8/3");
      EXPECT_EQ(row["approx"], "2.6667");
    }
  }
  EXPECT_TRUE(saw_power);
  EXPECT_EQ(csv_header(), "g_id,h_id,gamma_g,gamma_h,gamma_product,pi_g,diam_g,ratio,worst_bound_margin");
  EXPECT_EQ(to_csv_row(report).substr(0, 14), "Cl,Cl,2,2,4,2,");
}

TEST(Bounds, AllPairsUpToFour) {
  for (const auto& g : oracle::connected_corpus(1, 4)) {
    for (const auto& h : oracle::connected_corpus(1, 4)) {
      PairOptions options;
      options.with_fair = true;
      BoundReport report;
      ASSERT_NO_THROW(report = check_pair(g.graph, h.graph, options)) << g.id << " " << h.id;
      EXPECT_GE(*report.vizing_ratio, Rational(1));
      EXPECT_GE(*report.worst_proven_margin(), Rational(0));
    }
  }
}
