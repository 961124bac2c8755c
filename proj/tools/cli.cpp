#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ivspec/bounds.hpp"
#include "ivspec/error.hpp"
#include "ivspec/generators.hpp"
#include "ivspec/io.hpp"
#include "ivspec/labeling.hpp"
#include "ivspec/search.hpp"

namespace ivspec::cli {

namespace {

constexpr std::string_view kGenPrefix = "gen:";

// A graph argument is an edge-list path, or `gen:<spec>` for a generated graph.
Graph load_graph(const std::string& arg) {
  if (arg.starts_with(kGenPrefix)) return generate(parse_generator_spec(arg.substr(kGenPrefix.size())));
  return load_edge_list(arg);
}

// A labeling argument is a file path, or the labels themselves ("1 2 3" or "1,2,3").
EdgeLabeling load_labels(const std::string& arg, const Graph& g) {
  if (std::filesystem::exists(arg)) return load_labeling(arg, g);
  if (!arg.empty() && arg.find_first_not_of("0123456789 ,\t") == std::string::npos) {
    std::string text = arg;
    for (char& c : text) {
      if (c == ',') c = ' ';
    }
    std::istringstream in(text);
    return read_labeling(in, g);
  }
  throw Error("cannot open labeling file '" + arg + "'");
}

struct SearchFlags {
  std::string mode = "exhaustive";
  std::uint64_t seed = 0;
  std::uint64_t moves = 100'000;
  bool no_symmetry = false;
  bool no_prune = false;
  bool force = false;
  unsigned threads = 1;
  double temperature = 1.0;
  double cooling = 0.999;

  void attach(CLI::App& cmd) {
    cmd.add_option("--mode", mode, "Search mode")
        ->check(CLI::IsMember({"exhaustive", "anneal"}))
        ->capture_default_str();
    cmd.add_option("--seed", seed, "RNG seed")->capture_default_str();
    cmd.add_option("--moves", moves, "Anneal move budget")->capture_default_str();
    cmd.add_flag("--no-symmetry", no_symmetry, "Disable reflection pruning");
    cmd.add_flag("--no-prune", no_prune, "Disable branch-and-bound pruning");
    cmd.add_flag("--force", force, "Allow exhaustive search above 12 edges");
    cmd.add_option("--threads", threads, "Concurrent exhaustive shards")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd.add_option("--temperature", temperature, "Anneal initial temperature")
        ->capture_default_str();
    cmd.add_option("--cooling", cooling, "Anneal geometric cooling factor")
        ->capture_default_str();
  }

  SearchConfig config() const {
    SearchConfig cfg;
    cfg.mode = mode == "anneal" ? SearchMode::anneal : SearchMode::exhaustive;
    cfg.seed = seed;
    cfg.max_moves = moves;
    cfg.symmetry_reduction = !no_symmetry;
    cfg.prune = !no_prune;
    cfg.force = force;
    cfg.parallel_width = threads;
    cfg.initial_temperature = temperature;
    cfg.cooling = cooling;
    return cfg;
  }
};

void print_table(std::ostream& out, const BoundReport& report) {
  auto yes_no = [](bool b) { return b ? "yes" : "NO"; };
  out << "r = " << report.r << ", n = " << report.n << ", m = " << report.m << '\n';
  out << "|V_int| = " << report.v_int.size() << ", k = " << report.k
      << ", bound = " << report.bound << '\n';
  out << "V_int:";
  for (Vertex v : report.v_int.vertices) out << ' ' << v;
  out << '\n';
  if (!report.surr_edge_counts.empty()) {
    out << std::setw(10) << "component" << std::setw(10) << "|V(P)|" << std::setw(12)
        << "|E(Surr)|" << std::setw(10) << "expected" << '\n';
    for (std::size_t i = 0; i < report.surr_edge_counts.size(); ++i) {
      const SurrCount& c = report.surr_edge_counts[i];
      out << std::setw(10) << i << std::setw(10) << c.path_vertices << std::setw(12)
          << c.surr_edges << std::setw(10) << c.expected << (c.ok() ? "" : "  MISMATCH") << '\n';
    }
  }
  out << "path forest:        " << yes_no(report.proposition_holds) << '\n';
  out << "|V_int| <= bound:   " << yes_no(report.theorem_holds) << '\n';
  out << "Surr counts:        "
      << (report.surr_counts_ok ? yes_no(*report.surr_counts_ok) : "not checked") << '\n';
  out << "Surr disjoint:      " << yes_no(report.disjointness_ok) << '\n';
  out << "Surr union <= |E|:  " << yes_no(report.union_within_edges) << '\n';
  out << "2|E| = r|V|:        " << yes_no(report.edge_identity_ok) << '\n';
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interval spectra of edge labelings on regular graphs"};
  app.require_subcommand(1);

  std::string spec_text, output_path;
  auto* gen = app.add_subcommand("gen", "Emit a generated graph in edge-list format");
  gen->add_option("spec", spec_text, "Generator spec, e.g. cycle:5 or random_regular:10:3:7")
      ->required();
  gen->add_option("-o,--output", output_path, "Write to a file instead of stdout");

  std::string graph_arg, labels_arg;
  auto* vint = app.add_subcommand("vint", "Print V_int of a labeling as JSON");
  vint->add_option("graph", graph_arg, "Edge-list file or gen:<spec>")->required();
  vint->add_option("labeling", labels_arg, "Labeling file or inline labels")->required();

  bool table = false;
  auto* check = app.add_subcommand("check", "Evaluate the bound and its counting steps");
  check->add_option("graph", graph_arg, "Edge-list file or gen:<spec>")->required();
  check->add_option("labeling", labels_arg, "Labeling file or inline labels")->required();
  check->add_flag("--table", table, "Human-readable table instead of JSON");

  SearchFlags search;
  auto* maximize_cmd = app.add_subcommand("maximize", "Search for a labeling maximizing |V_int|");
  maximize_cmd->add_option("graph", graph_arg, "Edge-list file or gen:<spec>")->required();
  search.attach(*maximize_cmd);

  std::string family;
  auto* sweep_cmd = app.add_subcommand("sweep", "Maximize over a graph family (JSON lines)");
  sweep_cmd->add_option("--family", family, "Family with ranges, e.g. cycle:3..8")->required();
  search.attach(*sweep_cmd);

  std::uint64_t trials = 1000, fuzz_seed = 0;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Check random labelings against the bound");
  fuzz_cmd->add_option("graph", graph_arg, "Edge-list file or gen:<spec>")->required();
  fuzz_cmd->add_option("--trials", trials, "Number of labelings")->capture_default_str();
  fuzz_cmd->add_option("--seed", fuzz_seed, "RNG seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*gen) {
      const Graph g = generate(parse_generator_spec(spec_text));
      if (output_path.empty()) {
        write_edge_list(out, g);
      } else {
        std::ofstream file(output_path);
        if (!file) throw Error("cannot write '" + output_path + "'");
        write_edge_list(file, g);
      }
      return kOk;
    }

    if (*vint) {
      const Graph g = load_graph(graph_arg);
      const EdgeLabeling phi = load_labels(labels_arg, g);
      out << labeling_json(phi, interval_vertices(g, phi)).dump() << '\n';
      return kOk;
    }

    if (*check) {
      const Graph g = load_graph(graph_arg);
      const EdgeLabeling phi = load_labels(labels_arg, g);
      const BoundReport report = check_theorem(g, phi);
      if (table) {
        print_table(out, report);
      } else {
        Json j = labeling_json(phi, report.v_int);
        const Json fields = to_json(report);
        for (const auto& [key, value] : fields.items()) j[key] = value;
        out << j.dump() << '\n';
      }
      return report.all_ok() ? kOk : kViolation;
    }

    if (*maximize_cmd) {
      const Graph g = load_graph(graph_arg);
      out << to_json(maximize(g, search.config())).dump() << '\n';
      return kOk;
    }

    if (*sweep_cmd) {
      const auto members = expand_family(family);
      bool violation = false, failed = false;
      sweep(members, search.config(), [&](const SweepRow& row) {
        out << to_json(row).dump() << '\n' << std::flush;
        if (row.error) {
          (row.error->starts_with("COUNTEREXAMPLE") ? violation : failed) = true;
        }
        if (row.proposition_holds == false) violation = true;
        if (row.report && !row.report->all_ok()) violation = true;
      });
      if (violation) return kViolation;
      return failed ? kInputError : kOk;
    }

    if (*fuzz_cmd) {
      const Graph g = load_graph(graph_arg);
      const FuzzSummary summary = fuzz(g, trials, fuzz_seed, [&](const FuzzViolation& v) {
        Json j;
        j["violation_trial"] = v.trial;
        j["labeling"] = labeling_json(v.labeling, v.verdict.v_int);
        j["proposition"] = to_json(v.verdict);
        j["report"] = v.report ? to_json(*v.report) : Json(nullptr);
        out << j.dump() << '\n' << std::flush;
      });
      out << to_json(summary).dump() << '\n';
      return summary.passed == summary.trials ? kOk : kViolation;
    }
  } catch (const CounterexampleFound& e) {
    err << "ivspec: " << e.what() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    err << "ivspec: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

} // namespace ivspec::cli
