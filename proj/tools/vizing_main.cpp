// vizing: command-line front end for the domination / product-bound toolkit.
//
//   vizing gamma    --gen path:6
//   vizing power    --g6 Bw
//   vizing classify --gen cycle:5
//   vizing product  --gen cycle:4 --gen cycle:4
//   vizing fair     --gen path:7 --construct
//   vizing gammaf   --gen path:4
//   vizing survey   --config survey.cfg --workers 8 --out reports.jsonl

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vizing/bounds.hpp"
#include "vizing/classify.hpp"
#include "vizing/corpus.hpp"
#include "vizing/domination.hpp"
#include "vizing/error.hpp"
#include "vizing/fair_reception.hpp"
#include "vizing/generators.hpp"
#include "vizing/graph6.hpp"
#include "vizing/product.hpp"
#include "vizing/serialize.hpp"
#include "vizing/survey.hpp"

namespace {

using namespace vizing;

struct NamedGraph {
  std::string id;
  Graph graph;
};

// Graph inputs shared by every single-graph subcommand.
struct InputOptions {
  std::vector<std::string> gens;
  std::vector<std::string> g6s;
  std::vector<std::string> files;
  CLI::Option* gen = nullptr;
  CLI::Option* g6 = nullptr;
  CLI::Option* file = nullptr;

  void attach(CLI::App& app) {
    gen = app.add_option("--gen", gens, "Generator token NAME:PARAMS (path, cycle, complete, star, complete_bipartite)");
    g6 = app.add_option("--g6", g6s, "Graph in graph6 format");
    file = app.add_option("--file", files, "File of graph6 records, one per line");
  }

  // Inputs in command-line order.
  std::vector<NamedGraph> collect(const CLI::App& app) const {
    std::vector<NamedGraph> out;
    std::map<const CLI::Option*, std::size_t> seen;
    for (const CLI::Option* opt : app.parse_order()) {
      std::size_t i = seen[opt]++;
      if (opt == gen) {
        out.push_back({gens.at(i), generate_from_token(gens.at(i))});
      } else if (opt == g6) {
        out.push_back({g6s.at(i), decode_graph6(g6s.at(i))});
      } else if (opt == file) {
        for (auto& entry : load_corpus(files.at(i))) out.push_back({entry.id, std::move(entry.graph)});
      }
    }
    return out;
  }
};

struct CommonOptions {
  std::uint64_t budget = SearchBudget{}.node_limit;
  std::size_t enum_cap = SearchBudget{}.enumeration_cap;
  std::string format = "text";

  void attach(CLI::App& app, bool with_format = true) {
    app.add_option("--budget", budget, "Search node limit")->capture_default_str();
    app.add_option("--enum-cap", enum_cap, "Maximum number of gamma-sets to enumerate")->capture_default_str();
    if (with_format) {
      app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    }
  }

  SearchBudget search_budget() const { return SearchBudget{budget, enum_cap}; }
  bool json() const { return format == "json"; }
};

// Bad flag combinations that CLI11 cannot express.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error("usage_error", what) {}
};

std::string list(const VertexSet& s) { return to_json(s).dump(); }

int exit_code_for(const std::string& code) {
  static const std::map<std::string, int> codes = {
      {"usage_error", 2},   {"parse_error", 3},  {"domain_error", 4},
      {"size_error", 5},    {"inexact", 6},      {"cap_exceeded", 7},
      {"integrity_error", 8}, {"config_error", 9},
  };
  auto it = codes.find(code);
  return it == codes.end() ? 1 : it->second;
}

int report_error(const std::string& code, const std::string& message, const std::string& dump = "") {
  Json err{{"code", code}, {"message", message}};
  if (!dump.empty()) err["dump"] = Json::parse(dump, nullptr, false);
  std::cerr << Json{{"error", err}}.dump() << "\n";
  return exit_code_for(code);
}

std::vector<NamedGraph> require_inputs(const InputOptions& in, const CLI::App& app, std::size_t min_count) {
  auto graphs = in.collect(app);
  if (graphs.size() < min_count) {
    throw UsageError(std::string(app.get_name()) + " needs at least " + std::to_string(min_count) +
                      " graph input(s) via --gen, --g6 or --file");
  }
  return graphs;
}

void print_header(const NamedGraph& g, std::size_t count) {
  if (count > 1) std::cout << "graph=" << g.id << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact domination, power, fair receptions and Vizing-type bounds"};
  app.require_subcommand(1);

  InputOptions gamma_in, power_in, classify_in, product_in, fair_in, gammaf_in;
  CommonOptions gamma_opts, power_opts, product_opts, fair_opts, gammaf_opts;

  auto* gamma_cmd = app.add_subcommand("gamma", "Domination number and a minimum dominating set");
  gamma_in.attach(*gamma_cmd);
  gamma_opts.attach(*gamma_cmd);
  bool gamma_all = false;
  gamma_cmd->add_flag("--all", gamma_all, "Also enumerate every gamma-set");

  auto* power_cmd = app.add_subcommand("power", "Power pi(G): least allegiance over all gamma-sets");
  power_in.attach(*power_cmd);
  power_opts.attach(*power_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "Forbidden induced subgraph profile (JSON)");
  classify_in.attach(*classify_cmd);
  std::size_t rmax = kDefaultRMax;
  classify_cmd->add_option("--rmax", rmax, "Largest r profiled for K_r and K_1,r")->capture_default_str();

  auto* product_cmd = app.add_subcommand("product", "Cartesian product of two graphs");
  product_in.attach(*product_cmd);
  product_opts.attach(*product_cmd);
  std::size_t cap = kDefaultProductCap;
  bool product_gamma = false;
  bool product_bounds = false;
  product_cmd->add_option("--cap", cap, "Maximum product order")->capture_default_str();
  product_cmd->add_flag("--gamma", product_gamma, "Also compute gamma of the product");
  product_cmd->add_flag("--bounds", product_bounds, "Print the full bound report for the pair (JSON)");
  product_cmd->add_option("--rmax", rmax, "Largest r profiled for K_r and K_1,r")->capture_default_str();

  auto* fair_cmd = app.add_subcommand("fair", "Construct or verify a fair reception");
  fair_in.attach(*fair_cmd);
  fair_opts.attach(*fair_cmd);
  bool construct = false;
  std::string verify_path;
  auto* construct_opt = fair_cmd->add_flag("--construct", construct, "Build the diameter level-set reception");
  auto* verify_opt = fair_cmd->add_option("--verify", verify_path, "JSON file {\"sets\": [[...], ...]} to verify");
  construct_opt->excludes(verify_opt);

  auto* gammaf_cmd = app.add_subcommand("gammaf", "Exact fair domination number (at most 7 vertices)");
  gammaf_in.attach(*gammaf_cmd);
  gammaf_opts.attach(*gammaf_cmd);

  auto* survey_cmd = app.add_subcommand("survey", "Check every bound over corpus pairs");
  std::string config_path;
  std::vector<std::string> settings;
  std::string g_corpus, h_corpus, filters, out_path, summary_path, survey_format;
  std::size_t survey_cap = 0, survey_rmax = 0, workers = 0, survey_enum_cap = 0;
  std::uint64_t survey_budget = 0;
  bool with_fair = false, allow_disconnected = false;
  survey_cmd->add_option("--config", config_path, "key=value config file");
  survey_cmd->add_option("--g-corpus", g_corpus, "Comma-separated graph6 files for G");
  survey_cmd->add_option("--h-corpus", h_corpus, "Comma-separated graph6 files for H (default: G corpus)");
  survey_cmd->add_option("--filter", filters, "Comma-separated class predicates G must satisfy");
  survey_cmd->add_option("--cap", survey_cap, "Maximum product order");
  survey_cmd->add_option("--budget", survey_budget, "Search node limit");
  survey_cmd->add_option("--enum-cap", survey_enum_cap, "Maximum gamma-sets enumerated for pi(G)");
  survey_cmd->add_option("--rmax", survey_rmax, "Largest r profiled");
  survey_cmd->add_option("--workers", workers, "Worker threads");
  survey_cmd->add_option("--format", survey_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  survey_cmd->add_option("--out", out_path, "Report file (default stdout)");
  survey_cmd->add_option("--summary", summary_path, "Summary JSON file");
  survey_cmd->add_flag("--fair", with_fair, "Compute brute-force gamma_F for factors with <= 7 vertices");
  survey_cmd->add_flag("--allow-disconnected", allow_disconnected, "Keep disconnected corpus graphs");
  survey_cmd->add_option("--set", settings, "Extra key=value setting (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return report_error("usage_error", e.what());
  }

  try {
    if (gamma_cmd->parsed()) {
      auto graphs = require_inputs(gamma_in, *gamma_cmd, 1);
      for (const auto& g : graphs) {
        auto cert = domination_number(g.graph, gamma_opts.search_budget(), gamma_all);
        if (gamma_opts.json()) {
          Json doc = to_json(cert);
          doc["graph"] = g.id;
          std::cout << doc.dump() << "\n";
          continue;
        }
        print_header(g, graphs.size());
        std::cout << "gamma=" << cert.gamma << "\n"
                  << "gamma_set=" << list(cert.one_gamma_set) << "\n";
        if (cert.all_gamma_sets) {
          std::cout << "gamma_sets=" << cert.all_gamma_sets->size() << "\n";
          for (const auto& s : *cert.all_gamma_sets) std::cout << list(s) << "\n";
        }
      }
    } else if (power_cmd->parsed()) {
      auto graphs = require_inputs(power_in, *power_cmd, 1);
      for (const auto& g : graphs) {
        auto result = power(g.graph, power_opts.search_budget());
        if (power_opts.json()) {
          Json doc = to_json(result);
          doc["graph"] = g.id;
          std::cout << doc.dump() << "\n";
          continue;
        }
        print_header(g, graphs.size());
        std::cout << "pi=" << result.power << "\n"
                  << "witness=" << list(result.witness) << "\n"
                  << "gamma=" << result.gamma << "\n"
                  << "gamma_sets=" << result.gamma_set_count << "\n";
      }
    } else if (classify_cmd->parsed()) {
      for (const auto& g : require_inputs(classify_in, *classify_cmd, 1)) {
        Json doc{{"graph", g.id}};
        doc.update(to_json(classify(g.graph, rmax)));
        std::cout << doc.dump() << "\n";
      }
    } else if (product_cmd->parsed()) {
      auto graphs = require_inputs(product_in, *product_cmd, 2);
      if (graphs.size() != 2) throw UsageError("product takes exactly two graphs");
      if (product_bounds) {
        PairOptions options;
        options.budget = product_opts.search_budget();
        options.product_cap = cap;
        options.r_max = rmax;
        std::cout << to_json(check_pair(graphs[0].graph, graphs[1].graph, options, graphs[0].id,
                                        graphs[1].id))
                         .dump()
                  << "\n";
        return 0;
      }
      Graph p = cartesian_product(graphs[0].graph, graphs[1].graph, cap);
      std::optional<DominationCertificate> cert;
      if (product_gamma) cert = domination_number(p, product_opts.search_budget());
      if (product_opts.json()) {
        Json doc{{"order", p.order()}, {"size", p.edge_count()}, {"graph6", encode_graph6(p)}};
        if (cert) doc["gamma"] = to_json(*cert);
        std::cout << doc.dump() << "\n";
      } else {
        std::cout << "order=" << p.order() << "\n"
                  << "size=" << p.edge_count() << "\n"
                  << "graph6=" << encode_graph6(p) << "\n";
        if (cert) std::cout << "gamma=" << cert->gamma << "\n" << "gamma_set=" << list(cert->one_gamma_set) << "\n";
      }
    } else if (fair_cmd->parsed()) {
      if (!construct && verify_path.empty()) throw UsageError("fair needs --construct or --verify FILE");
      auto graphs = require_inputs(fair_in, *fair_cmd, 1);
      for (const auto& g : graphs) {
        std::optional<FairReception> fr;
        FairVerdict verdict;
        if (construct) {
          fr = level_set_fair_reception(g.graph, fair_opts.search_budget());
          verdict.verified = fr->verified();
        } else {
          std::ifstream in(verify_path);
          if (!in) throw ConfigError("cannot open '" + verify_path + "'");
          auto doc = nlohmann::json::parse(in, nullptr, false);
          if (doc.is_discarded()) throw ParseError(0, "'" + verify_path + "' is not valid JSON");
          fr = fair_reception_from_json(g.graph, doc);
          verdict = verify_fair_reception(g.graph, *fr, fair_opts.search_budget());
        }
        if (fair_opts.json()) {
          Json doc = to_json(*fr, &verdict);
          doc["graph"] = g.id;
          std::cout << doc.dump() << "\n";
          continue;
        }
        print_header(g, graphs.size());
        std::cout << "k=" << fr->k() << "\n"
                  << "verified=" << (fr->verified() ? "true" : "false") << "\n"
                  << "provenance=" << fr->provenance() << "\n";
        for (std::size_t i = 0; i < fr->k(); ++i) std::cout << "S" << i + 1 << "=" << list(fr->sets()[i]) << "\n";
        std::cout << "Z=" << list(fr->z()) << "\n";
        if (verdict.counterexample) {
          const auto& c = *verdict.counterexample;
          std::string chosen;
          for (auto i : c.chosen) chosen += (chosen.empty() ? "S" : ",S") + std::to_string(i + 1);
          std::cout << "counterexample_sets=" << chosen << "\n"
                    << "counterexample_d=" << list(c.d) << "\n"
                    << "counterexample_score=" << c.score << "\n";
        }
      }
    } else if (gammaf_cmd->parsed()) {
      auto graphs = require_inputs(gammaf_in, *gammaf_cmd, 1);
      for (const auto& g : graphs) {
        auto result = fair_domination_number_bruteforce(g.graph, gammaf_opts.search_budget());
        Json family = Json::array();
        for (const auto& s : result.witness) family.push_back(to_json(s));
        if (gammaf_opts.json()) {
          std::cout << Json{{"graph", g.id}, {"gamma_f", result.gamma_f}, {"witness", family}}.dump() << "\n";
          continue;
        }
        print_header(g, graphs.size());
        std::cout << "gamma_f=" << result.gamma_f << "\n" << "witness=" << family.dump() << "\n";
      }
    } else if (survey_cmd->parsed()) {
      // Precedence: command-line flags > config file > defaults.
      SurveyConfig config;
      if (!config_path.empty()) apply_config_file(config, config_path);
      for (const auto& s : settings) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw UsageError("--set expects key=value, got '" + s + "'");
        apply_setting(config, s.substr(0, eq), s.substr(eq + 1));
      }
      if (!g_corpus.empty()) apply_setting(config, "g_corpus", g_corpus);
      if (!h_corpus.empty()) apply_setting(config, "h_corpus", h_corpus);
      if (!filters.empty()) apply_setting(config, "filter", filters);
      if (survey_cap) config.pair.product_cap = survey_cap;
      if (survey_budget) config.pair.budget.node_limit = survey_budget;
      if (survey_enum_cap) config.pair.budget.enumeration_cap = survey_enum_cap;
      if (survey_rmax) config.pair.r_max = survey_rmax;
      if (workers) config.workers = workers;
      if (!survey_format.empty()) apply_setting(config, "format", survey_format);
      if (!out_path.empty()) config.out_path = out_path;
      if (!summary_path.empty()) config.summary_path = summary_path;
      if (with_fair) config.pair.with_fair = true;
      if (allow_disconnected) config.connected_only = false;
      if (config.g_corpus.empty()) throw ConfigError("survey needs --g-corpus or g_corpus in --config");

      std::ofstream file_out;
      if (!config.out_path.empty()) {
        file_out.open(config.out_path);
        if (!file_out) throw ConfigError("cannot write '" + config.out_path + "'");
      }
      std::ostream& out = config.out_path.empty() ? std::cout : file_out;
      SurveySummary summary = run_survey(config, out, std::cerr);
      const std::string doc = to_json(summary).dump(2);
      if (!config.summary_path.empty()) {
        std::ofstream s(config.summary_path);
        if (!s) throw ConfigError("cannot write '" + config.summary_path + "'");
        s << doc << "\n";
      }
      (config.out_path.empty() ? std::cerr : std::cout) << doc << "\n";
      if (summary.pairs == 0) std::cerr << "survey: zero pairs\n";
    }
  } catch (const IntegrityError& e) {
    return report_error(e.code(), e.what(), e.dump());
  } catch (const Error& e) {
    return report_error(e.code(), e.what());
  } catch (const std::exception& e) {
    return report_error("internal_error", e.what());
  }
  return 0;
}
