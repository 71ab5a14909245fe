#include "listcolor/cli.hpp"

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "listcolor/catalog.hpp"
#include "listcolor/discharge.hpp"
#include "listcolor/nullstellensatz.hpp"
#include "listcolor/oracle.hpp"
#include "listcolor/plane_graph.hpp"
#include "listcolor/report.hpp"
#include "listcolor/text_format.hpp"

namespace lc {

namespace {

struct GlobalOptions {
  std::string format = "text";
  bool quiet = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class Emitter {
 public:
  Emitter(const GlobalOptions& g, std::ostream& out) : g_(g), out_(out) {}
  bool json() const { return g_.format == "json"; }
  void text(const std::string& s) {
    if (!g_.quiet) out_ << s;
  }
  void emit(const nlohmann::json& j) {
    if (!g_.quiet) out_ << j.dump(2) << '\n';
  }

 private:
  const GlobalOptions& g_;
  std::ostream& out_;
};

// Path or --builtin name, exactly one.
Configuration load_configuration(const std::string& path, const std::string& builtin) {
  if (path.empty() == builtin.empty()) {
    throw std::invalid_argument("give either a configuration file or --builtin NAME");
  }
  if (!builtin.empty()) {
    const CatalogEntry* entry = find_entry(builtin_catalog(), builtin);
    if (!entry) throw std::invalid_argument("no catalog entry named '" + builtin + "'");
    return entry->configuration;
  }
  return parse_configuration(read_file(path));
}

struct ReduceOptions {
  std::string path, builtin;
  std::vector<std::string> reversed;
  bool all_witnesses = false;
};

int cmd_reduce(const ReduceOptions& o, Emitter& emit) {
  Configuration c = load_configuration(o.path, o.builtin);
  OrientedEdgeList orientation = default_orientation(c.internal);
  for (const auto& arg : o.reversed) {
    auto colon = arg.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("--reverse-edge expects U:V");
    int u = std::stoi(arg.substr(0, colon)), v = std::stoi(arg.substr(colon + 1));
    bool found = false;
    for (auto& e : orientation) {
      if ((e.tail == u && e.head == v) || (e.tail == v && e.head == u)) {
        std::swap(e.tail, e.head);
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("no edge " + arg + " in the configuration");
  }
  ReducibilityVerdict verdict = is_reducible(c, orientation);
  if (emit.json()) {
    emit.emit(reduce_json(c, verdict, o.all_witnesses));
  } else {
    emit.text(format_reduce_text(c, verdict, o.all_witnesses));
  }
  return verdict.reducible() ? kExitPass : kExitFail;
}

struct OracleOptions {
  std::string path, builtin;
  bool exhaustive = false;
  long trials = 0;
  std::uint64_t seed = 42;
  bool force = false;
  int budget = 8;
};

int cmd_oracle(const OracleOptions& o, bool trials_given, Emitter& emit) {
  if (o.exhaustive && trials_given) {
    throw std::invalid_argument("--exhaustive and --trials are mutually exclusive");
  }
  if (trials_given && o.trials < 1) throw std::invalid_argument("--trials must be at least 1");
  Configuration c = load_configuration(o.path, o.builtin);
  SizeVector sizes;
  for (int t : derive_caps(c)) sizes.push_back(t + 1);
  ChoosabilityVerdict verdict;
  std::string mode;
  if (trials_given) {
    verdict = f_choosable_sampled(c.internal, sizes, o.trials, o.seed);
    mode = "sampled trials=" + std::to_string(o.trials) + " seed=" + std::to_string(o.seed);
  } else {
    verdict = f_choosable_exhaustive(c.internal, sizes, {o.budget, o.force});
    mode = "exhaustive";
  }
  if (emit.json()) {
    emit.emit(oracle_json(c, sizes, mode, verdict));
  } else {
    emit.text(format_oracle_text(c, sizes, mode, verdict));
  }
  return verdict.found_counterexample() ? kExitFail : kExitPass;
}

int cmd_discharge(const std::string& path, int stage, Emitter& emit) {
  PlaneGraph pg = parse_plane_graph(read_file(path));
  DischargeReport r = report(pg);
  if (emit.json()) {
    emit.emit(discharge_json(r, stage));
  } else {
    emit.text(format_discharge_text(r, stage));
  }
  return r.negative(stage).empty() ? kExitPass : kExitFail;
}

int cmd_validate(const std::string& path, int distance, Emitter& emit) {
  Graph g = parse_graph(read_file(path));
  HypothesisVerdict v = validate_hypothesis(g, distance);
  if (emit.json()) {
    emit.emit(hypothesis_json(v));
  } else {
    emit.text(format_hypothesis_text(v));
  }
  return v.satisfied ? kExitPass : kExitFail;
}

struct CatalogOptions {
  bool list = false;
  bool check_all = false;
  std::string catalog_path;
  long trials = 100000;
  std::uint64_t seed = 42;
};

int cmd_catalog(const CatalogOptions& o, Emitter& emit) {
  if (o.list == o.check_all) throw std::invalid_argument("give exactly one of --list or --check-all");
  std::vector<CatalogEntry> user;
  if (!o.catalog_path.empty()) user = load_catalog(read_file(o.catalog_path));
  const std::vector<CatalogEntry>& catalog = o.catalog_path.empty() ? builtin_catalog() : user;

  if (o.list) {
    nlohmann::json j = nlohmann::json::array();
    std::string text;
    for (const auto& e : catalog) {
      text += e.name + '\n';
      j.push_back({{"name", e.name}, {"provenance", e.provenance}});
    }
    emit.json() ? emit.emit(j) : emit.text(text);
    return kExitPass;
  }

  bool all_pass = true;
  std::string text;
  nlohmann::json j = nlohmann::json::array();
  for (const auto& e : catalog) {
    nlohmann::json row = {{"name", e.name}};
    try {
      CapVector caps = derive_caps(e.configuration);
      const int total = std::accumulate(caps.begin(), caps.end(), 0) + static_cast<int>(caps.size());
      OracleMode mode = total <= ExhaustiveOptions{}.budget
                            ? OracleMode{ExhaustiveMode{}}
                            : OracleMode{SampledMode{o.trials, o.seed}};
      CrossCheckReport cc = cross_check(e.configuration, mode);
      const bool ok = cc.cn.reducible() && cc.passed;
      all_pass = all_pass && ok;
      std::string mode_name = std::holds_alternative<ExhaustiveMode>(mode)
                                  ? "exhaustive"
                                  : "sampled trials=" + std::to_string(o.trials) +
                                        " seed=" + std::to_string(o.seed);
      text += (ok ? "PASS " : "FAIL ") + e.name + ": " + to_string(cc.cn.status) + ", " +
              std::to_string(cc.cn.count()) + " valid expansion(s); oracle " + mode_name + ": " +
              to_string(cc.oracle.status) + '\n';
      row.update({{"pass", ok},
                  {"verdict", to_string(cc.cn.status)},
                  {"count", cc.cn.count()},
                  {"oracle_mode", mode_name},
                  {"oracle", to_string(cc.oracle.status)}});
    } catch (const UncheckableConfiguration& ex) {
      all_pass = false;
      text += "FAIL " + e.name + ": " + ex.what() + '\n';
      row.update({{"pass", false}, {"error", ex.what()}});
    }
    j.push_back(row);
  }
  emit.json() ? emit.emit(j) : emit.text(text);
  return all_pass ? kExitPass : kExitFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"listcolor: list-colouring reducibility and discharging workbench", "listcolor"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--quiet", global.quiet, "Suppress normal output; only the exit status remains");

  ReduceOptions reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Check reducibility of a configuration");
  reduce_cmd->add_option("config", reduce.path, "Configuration file");
  reduce_cmd->add_option("--builtin", reduce.builtin, "Use a shipped catalog entry");
  reduce_cmd->add_option("--reverse-edge", reduce.reversed, "Orient edge U:V the other way");
  reduce_cmd->add_flag("--all-witnesses", reduce.all_witnesses, "Print every valid expansion");

  OracleOptions oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force choosability with sizes caps+1");
  oracle_cmd->add_option("config", oracle.path, "Configuration file");
  oracle_cmd->add_option("--builtin", oracle.builtin, "Use a shipped catalog entry");
  oracle_cmd->add_flag("--exhaustive", oracle.exhaustive, "Enumerate every list assignment");
  auto* trials_opt = oracle_cmd->add_option("--trials", oracle.trials, "Sampled trials");
  oracle_cmd->add_option("--seed", oracle.seed, "Sampler seed");
  oracle_cmd->add_flag("--force", oracle.force, "Allow exhaustive search beyond the budget");
  oracle_cmd->add_option("--budget", oracle.budget, "Exhaustive budget on the sum of sizes");

  std::string plane_path;
  int stage = 2;
  auto* discharge_cmd = app.add_subcommand("discharge", "Run the discharging rules on a plane graph");
  discharge_cmd->add_option("planegraph", plane_path, "Plane graph file")->required();
  discharge_cmd->add_option("--stage", stage, "Last stage to report")->check(CLI::Range(0, 2));

  std::string graph_path;
  int distance = 5;
  auto* validate_cmd = app.add_subcommand("validate", "Check the 4-cycle distance hypothesis");
  validate_cmd->add_option("graph", graph_path, "Graph file")->required();
  validate_cmd->add_option("--distance", distance, "Required distance between 4-cycles")
      ->check(CLI::NonNegativeNumber);

  CatalogOptions catalog;
  auto* catalog_cmd = app.add_subcommand("catalog", "List or check the configuration catalog");
  catalog_cmd->add_flag("--list", catalog.list, "List entry names");
  catalog_cmd->add_flag("--check-all", catalog.check_all, "Reduce and cross-check every entry");
  catalog_cmd->add_option("--catalog", catalog.catalog_path, "Use this catalog file instead");
  catalog_cmd->add_option("--trials", catalog.trials, "Sampled cross-check trials")
      ->check(CLI::PositiveNumber);
  catalog_cmd->add_option("--seed", catalog.seed, "Sampled cross-check seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto selected = app.get_subcommands();
    out << (selected.empty() ? app.help() : selected.front()->help());
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  Emitter emit(global, out);
  try {
    if (reduce_cmd->parsed()) return cmd_reduce(reduce, emit);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle, trials_opt->count() > 0, emit);
    if (discharge_cmd->parsed()) return cmd_discharge(plane_path, stage, emit);
    if (validate_cmd->parsed()) return cmd_validate(graph_path, distance, emit);
    if (catalog_cmd->parsed()) return cmd_catalog(catalog, emit);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace lc
