#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "vizing/bounds.hpp"
#include "vizing/corpus.hpp"
#include "vizing/serialize.hpp"

namespace vizing {

enum class OutputFormat { json, csv };

struct SurveyConfig {
  std::vector<std::string> g_corpus;
  /// Empty means "same as g_corpus".
  std::vector<std::string> h_corpus;
  PairOptions pair;
  bool connected_only = true;
  /// Class predicates G must satisfy: triangle_free, claw_free, k<r>_free,
  /// star<r>_free, p<k>_free (e.g. "p6_free").
  std::vector<std::string> g_filters;
  std::string out_path;
  std::string summary_path;
  OutputFormat format = OutputFormat::json;
  std::size_t workers = 1;
};

/// Applies one key=value setting. Keys: g_corpus, h_corpus (comma lists),
/// cap, budget, enum_cap, rmax, connected_only, filter (comma list), out,
/// summary, format, workers, fair, sqrt_deficit.
void apply_setting(SurveyConfig& config, const std::string& key, const std::string& value);

/// Flat key=value lines; '#' starts a comment.
void apply_config_text(SurveyConfig& config, std::istream& in, const std::string& source = "<config>");
void apply_config_file(SurveyConfig& config, const std::string& path);

/// Throws ConfigError on nonpositive caps or worker count, or r_max < 3.
void validate(const SurveyConfig& config);

/// Evaluates a ClassProfile predicate name as used by g_filters.
bool profile_predicate(const ClassProfile& profile, const std::string& name);

struct BoundTally {
  std::size_t applicable = 0;
  std::size_t satisfied = 0;
};

struct DiameterStratum {
  std::size_t pairs = 0;
  /// d(G) > (3/2)γ(G).
  std::size_t long_diameter = 0;
  /// Diameter bound strictly above the Suen-Tarr bound.
  std::size_t diameter_beats_suen_tarr = 0;
};

struct SurveySummary {
  std::size_t g_graphs = 0;
  std::size_t h_graphs = 0;
  std::size_t skipped = 0;
  std::size_t pairs = 0;
  std::size_t inexact_pairs = 0;
  std::optional<Rational> min_vizing_ratio;
  std::string min_ratio_pair;
  /// Pairs with γ(G□H) < γ(G)γ(H).
  std::size_t vizing_violations = 0;
  std::map<std::string, BoundTally> bounds;
  std::map<std::size_t, DiameterStratum> by_diameter;
};

Json to_json(const SurveySummary& summary);

/// Runs check_pair over G-corpus × H-corpus in (g, h) input order, writing one
/// record per pair to `out` (JSON lines or CSV with header). Pairs are
/// evaluated by `config.workers` threads but emitted strictly in order, so
/// the output does not depend on the worker count. Skipped graphs are logged
/// to `log`. Integrity errors abort the run and propagate. Throws ConfigError
/// when no G corpus file is given.
SurveySummary run_survey(const SurveyConfig& config, std::ostream& out, std::ostream& log);

/// Same, with corpora already in memory.
SurveySummary run_survey(const SurveyConfig& config, const std::vector<CorpusEntry>& g_corpus,
                         const std::vector<CorpusEntry>& h_corpus, std::ostream& out,
                         std::ostream& log);

}  // namespace vizing
