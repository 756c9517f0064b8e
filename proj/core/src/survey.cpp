#include "vizing/survey.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <condition_variable>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "vizing/error.hpp"
#include "vizing/metrics.hpp"

namespace vizing {

namespace {

std::string trim(std::string_view s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t parse_count(const std::string& key, const std::string& value) {
  std::uint64_t out = 0;
  auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || end != value.data() + value.size()) {
    throw ConfigError("setting '" + key + "' needs a nonnegative integer, got '" + value + "'");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("setting '" + key + "' needs true/false, got '" + value + "'");
}

// "k4_free" -> 4 for prefix "k"
std::optional<std::size_t> parameter_of(const std::string& name, std::string_view prefix) {
  constexpr std::string_view suffix = "_free";
  if (!name.starts_with(prefix) || !name.ends_with(suffix)) return std::nullopt;
  auto digits = std::string_view(name).substr(prefix.size(), name.size() - prefix.size() - suffix.size());
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty()) return std::nullopt;
  return value;
}

bool lookup(const std::map<std::size_t, bool>& verdicts, std::size_t key, const std::string& name) {
  auto it = verdicts.find(key);
  if (it == verdicts.end()) throw ConfigError("predicate '" + name + "' is outside the profiled range");
  return it->second;
}

struct Filtered {
  std::vector<const CorpusEntry*> kept;
  std::size_t skipped = 0;
};

Filtered filter_corpus(const std::vector<CorpusEntry>& corpus, const SurveyConfig& config,
                       bool apply_predicates, std::ostream& log) {
  Filtered out;
  for (const auto& entry : corpus) {
    auto where = entry.source + ":" + std::to_string(entry.line);
    if (config.connected_only && !is_connected(entry.graph)) {
      log << "skip " << entry.id << " (" << where << "): disconnected\n";
      ++out.skipped;
      continue;
    }
    if (apply_predicates && !config.g_filters.empty()) {
      const auto profile = classify(entry.graph, config.pair.r_max);
      auto failed = std::find_if(config.g_filters.begin(), config.g_filters.end(),
                                 [&](const auto& f) { return !profile_predicate(profile, f); });
      if (failed != config.g_filters.end()) {
        log << "skip " << entry.id << " (" << where << "): not " << *failed << "\n";
        ++out.skipped;
        continue;
      }
    }
    out.kept.push_back(&entry);
  }
  return out;
}

void tally(SurveySummary& summary, const BoundReport& report) {
  ++summary.pairs;
  if (!report.exact) ++summary.inexact_pairs;
  if (report.vizing_ratio) {
    if (!summary.min_vizing_ratio || *report.vizing_ratio < *summary.min_vizing_ratio) {
      summary.min_vizing_ratio = report.vizing_ratio;
      summary.min_ratio_pair = report.g_id + " x " + report.h_id;
    }
    if (*report.vizing_ratio < Rational(1)) ++summary.vizing_violations;
  }
  for (const auto& row : report.bounds) {
    auto& t = summary.bounds[row.name];
    if (row.applicable) ++t.applicable;
    if (row.applicable && row.satisfied) ++t.satisfied;
  }
  if (report.diam_g) {
    auto& stratum = summary.by_diameter[*report.diam_g];
    ++stratum.pairs;
    if (2 * *report.diam_g > 3 * report.gamma_g) ++stratum.long_diameter;
    const auto* diam = report.find("diameter");
    const auto* st = report.find("suen_tarr");
    if (diam && st && diam->value && st->value && *diam->value > *st->value) {
      ++stratum.diameter_beats_suen_tarr;
    }
  }
}

}  // namespace

void apply_setting(SurveyConfig& config, const std::string& raw_key, const std::string& raw_value) {
  const std::string key = trim(raw_key);
  const std::string value = trim(raw_value);
  if (key == "g_corpus") {
    config.g_corpus = split_list(value);
  } else if (key == "h_corpus") {
    config.h_corpus = split_list(value);
  } else if (key == "cap") {
    config.pair.product_cap = parse_count(key, value);
  } else if (key == "budget") {
    config.pair.budget.node_limit = parse_count(key, value);
  } else if (key == "enum_cap") {
    config.pair.budget.enumeration_cap = parse_count(key, value);
  } else if (key == "rmax") {
    config.pair.r_max = parse_count(key, value);
  } else if (key == "connected_only") {
    config.connected_only = parse_bool(key, value);
  } else if (key == "filter") {
    config.g_filters = split_list(value);
  } else if (key == "out") {
    config.out_path = value;
  } else if (key == "summary") {
    config.summary_path = value;
  } else if (key == "format") {
    if (value == "json") {
      config.format = OutputFormat::json;
    } else if (value == "csv") {
      config.format = OutputFormat::csv;
    } else {
      throw ConfigError("format must be json or csv, got '" + value + "'");
    }
  } else if (key == "workers") {
    config.workers = parse_count(key, value);
  } else if (key == "fair") {
    config.pair.with_fair = parse_bool(key, value);
  } else if (key == "sqrt_deficit") {
    config.pair.assert_sqrt_deficit_class = parse_bool(key, value);
  } else {
    throw ConfigError("unknown setting '" + key + "'");
  }
}

void apply_config_text(SurveyConfig& config, std::istream& in, const std::string& source) {
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(source + ":" + std::to_string(number) + ": expected key=value");
    }
    apply_setting(config, line.substr(0, eq), line.substr(eq + 1));
  }
}

void apply_config_file(SurveyConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  apply_config_text(config, in, path);
}

void validate(const SurveyConfig& config) {
  if (config.pair.product_cap == 0) throw ConfigError("cap must be positive");
  if (config.pair.budget.node_limit == 0) throw ConfigError("budget must be positive");
  if (config.pair.budget.enumeration_cap == 0) throw ConfigError("enum_cap must be positive");
  if (config.workers == 0) throw ConfigError("workers must be positive");
  if (config.pair.r_max < 3) throw ConfigError("rmax must be at least 3");
}

bool profile_predicate(const ClassProfile& profile, const std::string& name) {
  if (name == "triangle_free") return profile.triangle_free;
  if (name == "claw_free") return profile.claw_free;
  if (name == "cograph") return lookup(profile.path_free, 4, name);
  if (auto r = parameter_of(name, "star")) return lookup(profile.star_free, *r, name);
  if (auto r = parameter_of(name, "k")) return lookup(profile.k_free, *r, name);
  if (auto k = parameter_of(name, "p")) return lookup(profile.path_free, *k, name);
  throw ConfigError("unknown class predicate '" + name + "'");
}

Json to_json(const SurveySummary& s) {
  Json out;
  out["g_graphs"] = s.g_graphs;
  out["h_graphs"] = s.h_graphs;
  out["skipped"] = s.skipped;
  out["pairs"] = s.pairs;
  out["inexact_pairs"] = s.inexact_pairs;
  out["min_vizing_ratio"] = s.min_vizing_ratio ? Json(to_string(*s.min_vizing_ratio)) : Json(nullptr);
  out["min_vizing_ratio_approx"] =
      s.min_vizing_ratio ? Json(to_decimal(*s.min_vizing_ratio)) : Json(nullptr);
  out["min_ratio_pair"] = s.min_ratio_pair;
  out["vizing_violations"] = s.vizing_violations;
  Json bounds = Json::object();
  for (const auto& [name, t] : s.bounds) {
    bounds[name] = Json{{"applicable", t.applicable}, {"satisfied", t.satisfied}};
  }
  out["bounds"] = std::move(bounds);
  Json strata = Json::array();
  for (const auto& [d, st] : s.by_diameter) {
    strata.push_back(Json{{"diam_g", d},
                          {"pairs", st.pairs},
                          {"long_diameter", st.long_diameter},
                          {"diameter_beats_suen_tarr", st.diameter_beats_suen_tarr}});
  }
  out["by_diameter"] = std::move(strata);
  return out;
}

SurveySummary run_survey(const SurveyConfig& config, std::ostream& out, std::ostream& log) {
  validate(config);
  if (config.g_corpus.empty()) throw ConfigError("no G corpus given");
  auto g_corpus = load_corpus(config.g_corpus);
  auto h_corpus = config.h_corpus.empty() ? g_corpus : load_corpus(config.h_corpus);
  return run_survey(config, g_corpus, h_corpus, out, log);
}

SurveySummary run_survey(const SurveyConfig& config, const std::vector<CorpusEntry>& g_corpus,
                         const std::vector<CorpusEntry>& h_corpus, std::ostream& out,
                         std::ostream& log) {
  validate(config);
  SurveySummary summary;
  auto gs = filter_corpus(g_corpus, config, true, log);
  auto hs = filter_corpus(h_corpus, config, false, log);
  summary.g_graphs = gs.kept.size();
  summary.h_graphs = hs.kept.size();
  summary.skipped = gs.skipped + hs.skipped;

  std::vector<std::pair<const CorpusEntry*, const CorpusEntry*>> pairs;
  for (const auto* g : gs.kept) {
    for (const auto* h : hs.kept) {
      if (g->graph.order() * h->graph.order() > config.pair.product_cap) {
        throw SizeError("pair " + g->id + " x " + h->id + " has " +
                        std::to_string(g->graph.order() * h->graph.order()) +
                        " product vertices, cap is " + std::to_string(config.pair.product_cap));
      }
      pairs.emplace_back(g, h);
    }
  }

  std::vector<std::optional<BoundReport>> results(pairs.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::size_t error_index = pairs.size();
  std::exception_ptr error;

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= pairs.size()) return;
      {
        std::lock_guard lock(mutex);
        if (i > error_index) return;
      }
      const auto& [g, h] = pairs[i];
      std::optional<BoundReport> report;
      std::exception_ptr failure;
      try {
        report = check_pair(g->graph, h->graph, config.pair, g->id, h->id);
      } catch (const BudgetExhausted& e) {
        BoundReport partial;
        partial.g_id = g->id;
        partial.h_id = h->id;
        partial.exact = false;
        partial.notes.push_back(std::string("factor gamma inexact: ") + e.what());
        report = std::move(partial);
      } catch (...) {
        failure = std::current_exception();
      }
      std::lock_guard lock(mutex);
      if (failure) {
        if (i < error_index) {
          error_index = i;
          error = failure;
        }
      } else {
        results[i] = std::move(report);
      }
      ready.notify_all();
    }
  };

  std::vector<std::thread> threads;
  const std::size_t worker_count = std::min(config.workers, std::max<std::size_t>(pairs.size(), 1));
  threads.reserve(worker_count);
  for (std::size_t t = 0; t < worker_count; ++t) threads.emplace_back(worker);

  if (config.format == OutputFormat::csv) out << csv_header() << "\n";
  std::exception_ptr abort;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::unique_lock lock(mutex);
    ready.wait(lock, [&] { return results[i].has_value() || error_index <= i; });
    if (!results[i]) {
      abort = error;
      break;
    }
    BoundReport report = std::move(*results[i]);
    results[i].reset();
    lock.unlock();
    if (config.format == OutputFormat::json) {
      out << to_json(report).dump() << "\n";
    } else {
      out << to_csv_row(report) << "\n";
    }
    tally(summary, report);
  }
  if (abort) {
    // Let the remaining workers drain quickly.
    next.store(pairs.size());
  }
  for (auto& t : threads) t.join();
  out.flush();
  if (abort) std::rethrow_exception(abort);
  return summary;
}

}  // namespace vizing
