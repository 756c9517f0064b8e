#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vizing/error.hpp"
#include "vizing/generators.hpp"
#include "vizing/graph6.hpp"
#include "vizing/survey.hpp"

using namespace vizing;

namespace {

std::vector<CorpusEntry> entries(std::initializer_list<Graph> graphs) {
  std::vector<CorpusEntry> out;
  std::size_t line = 1;
  for (const auto& g : graphs) out.push_back({encode_graph6(g), g, "mem", line++});
  return out;
}

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST(Survey, ConfigTextAndSettings) {
  SurveyConfig config;
  std::istringstream text(
      "# survey\n"
      "g_corpus = a.g6, b.g6\n"
      "cap=500\n"
      "budget=1000\n"
      "filter=claw_free,p6_free\n"
      "format=csv\n"
      "workers=3\n"
      "fair=true\n");
  apply_config_text(config, text);
  EXPECT_EQ(config.g_corpus, (std::vector<std::string>{"a.g6", "b.g6"}));
  EXPECT_EQ(config.pair.product_cap, 500U);
  EXPECT_EQ(config.pair.budget.node_limit, 1000U);
  EXPECT_EQ(config.g_filters, (std::vector<std::string>{"claw_free", "p6_free"}));
  EXPECT_EQ(config.format, OutputFormat::csv);
  EXPECT_EQ(config.workers, 3U);
  EXPECT_TRUE(config.pair.with_fair);

  // Later settings override earlier ones, which is how CLI flags win.
  apply_setting(config, "cap", "64");
  EXPECT_EQ(config.pair.product_cap, 64U);

  EXPECT_THROW(apply_setting(config, "colour", "red"), ConfigError);
  EXPECT_THROW(apply_setting(config, "format", "xml"), ConfigError);
  std::istringstream bad("cap\n");
  EXPECT_THROW(apply_config_text(config, bad), ConfigError);

  SurveyConfig zero;
  apply_setting(zero, "cap", "0");
  EXPECT_THROW(validate(zero), ConfigError);
  EXPECT_THROW(apply_config_file(zero, "/nonexistent/survey.cfg"), ConfigError);
}

TEST(Survey, Predicates) {
  ClassProfile c5 = classify(cycle_graph(5));
  EXPECT_TRUE(profile_predicate(c5, "triangle_free"));
  EXPECT_TRUE(profile_predicate(c5, "claw_free"));
  EXPECT_FALSE(profile_predicate(c5, "cograph"));
  EXPECT_TRUE(profile_predicate(c5, "p5_free"));
  EXPECT_TRUE(profile_predicate(c5, "k3_free"));
  EXPECT_TRUE(profile_predicate(c5, "star3_free"));
  EXPECT_THROW(profile_predicate(c5, "planar"), ConfigError);
}

TEST(Survey, SmallCorpusAgainstItself) {
  SurveyConfig config;
  auto corpus = oracle::connected_corpus(1, 4);
  std::ostringstream out;
  std::ostringstream log;
  auto summary = run_survey(config, corpus, corpus, out, log);
  EXPECT_EQ(summary.pairs, corpus.size() * corpus.size());
  EXPECT_EQ(count_lines(out.str()), summary.pairs);
  ASSERT_TRUE(summary.min_vizing_ratio);
  EXPECT_EQ(*summary.min_vizing_ratio, Rational(1));
  EXPECT_EQ(summary.vizing_violations, 0U);
  EXPECT_EQ(summary.inexact_pairs, 0U);
  for (const auto& [name, tally] : summary.bounds) {
    if (name == "vizing" || name == "claw_free_two_thirds") continue;
    EXPECT_EQ(tally.applicable, tally.satisfied) << name;
  }
  Json j = to_json(summary);
  EXPECT_EQ(j["min_vizing_ratio"], "1");
}

TEST(Survey, EmptyCorpus) {
  SurveyConfig config;
  std::ostringstream out;
  std::ostringstream log;
  auto summary = run_survey(config, {}, {}, out, log);
  EXPECT_EQ(summary.pairs, 0U);
  EXPECT_TRUE(out.str().empty());
  EXPECT_FALSE(summary.min_vizing_ratio);
}

TEST(Survey, DisconnectedGraphSkipped) {
  SurveyConfig config;
  auto g = entries({path_graph(3), Graph(2)});
  auto h = entries({path_graph(2)});
  std::ostringstream out;
  std::ostringstream log;
  auto summary = run_survey(config, g, h, out, log);
  EXPECT_EQ(summary.pairs, 1U);
  EXPECT_EQ(summary.skipped, 1U);
  EXPECT_NE(log.str().find("skip A? (mem:2): disconnected"), std::string::npos) << log.str();

  config.connected_only = false;
  std::ostringstream out2;
  auto all = run_survey(config, g, h, out2, log);
  EXPECT_EQ(all.pairs, 2U);
}

TEST(Survey, FilterApplies) {
  SurveyConfig config;
  config.g_filters = {"claw_free"};
  auto g = entries({star_graph(3), path_graph(4)});
  auto h = entries({path_graph(2)});
  std::ostringstream out;
  std::ostringstream log;
  auto summary = run_survey(config, g, h, out, log);
  EXPECT_EQ(summary.pairs, 1U);
  EXPECT_NE(log.str().find("not claw_free"), std::string::npos);
}

TEST(Survey, CsvOutput) {
  SurveyConfig config;
  config.format = OutputFormat::csv;
  auto g = entries({cycle_graph(4)});
  std::ostringstream out;
  std::ostringstream log;
  run_survey(config, g, g, out, log);
  EXPECT_EQ(out.str().substr(0, csv_header().size() + 1), csv_header() + "\n");
  EXPECT_NE(out.str().find("Cl,Cl,2,2,4,2,2,1.0000"), std::string::npos) << out.str();
}

TEST(Survey, CapCheckedUpFront) {
  SurveyConfig config;
  config.pair.product_cap = 20;
  auto g = entries({path_graph(4), path_graph(5)});
  std::ostringstream out;
  std::ostringstream log;
  EXPECT_THROW(run_survey(config, g, g, out, log), SizeError);
  EXPECT_TRUE(out.str().empty());
}

TEST(Survey, BudgetFailuresAreNonFatal) {
  SurveyConfig config;
  config.pair.budget.node_limit = 40;
  auto g = entries({path_graph(7)});
  std::ostringstream out;
  std::ostringstream log;
  auto summary = run_survey(config, g, g, out, log);
  EXPECT_EQ(summary.pairs, 1U);
  EXPECT_EQ(summary.inexact_pairs, 1U);
  EXPECT_NE(out.str().find("\"exact\":false"), std::string::npos);
}

TEST(Survey, DeterministicAcrossWorkerCounts) {
  auto corpus = oracle::connected_corpus(3, 4);
  std::string reference;
  for (std::size_t workers : {1U, 2U, 8U}) {
    SurveyConfig config;
    config.workers = workers;
    std::ostringstream out;
    std::ostringstream log;
    run_survey(config, corpus, corpus, out, log);
    if (reference.empty()) {
      reference = out.str();
      EXPECT_FALSE(reference.empty());
    } else {
      EXPECT_EQ(out.str(), reference) << workers;
    }
  }
}

TEST(Survey, FileCorpora) {
  SurveyConfig config;
  config.g_corpus = {oracle::data_dir() + "/connected_n3.g6"};
  std::ostringstream out;
  std::ostringstream log;
  auto summary = run_survey(config, out, log);
  EXPECT_EQ(summary.pairs, 4U);
  SurveyConfig none;
  EXPECT_THROW(run_survey(none, out, log), ConfigError);
}
