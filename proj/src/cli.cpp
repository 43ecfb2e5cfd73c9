#include "packcol/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "packcol/density.hpp"
#include "packcol/enumerate.hpp"
#include "packcol/graph.hpp"
#include "packcol/graph6.hpp"
#include "packcol/harness.hpp"
#include "packcol/packing.hpp"
#include "packcol/reducibility.hpp"

namespace packcol {

namespace {

struct GraphInput {
  std::string graph6_text;
  std::string input_path;
  std::string generator;

  void attach(CLI::App* cmd) {
    cmd->add_option("--graph6", graph6_text, "graph6 line");
    cmd->add_option("--input", input_path, "file with one graph6 line, or - for stdin");
    cmd->add_option("--gen", generator,
                    "named graph: petersen, cycle:N, path:N, complete:N, prism:N");
  }

  Graph resolve(std::istream& in) const {
    if (!generator.empty()) {
      auto colon = generator.find(':');
      std::string kind = generator.substr(0, colon);
      int n = 0;
      if (colon != std::string::npos) n = std::stoi(generator.substr(colon + 1));
      if (kind == "petersen") return petersen_graph();
      if (kind == "cycle") return cycle_graph(n);
      if (kind == "path") return path_graph(n);
      if (kind == "complete") return complete_graph(n);
      if (kind == "prism") return prism_graph(n);
      throw std::invalid_argument("unknown generator: " + kind);
    }
    if (!graph6_text.empty()) return parse_graph6(graph6_text);
    std::string line;
    if (!input_path.empty() && input_path != "-") {
      std::ifstream file(input_path);
      if (!file) throw std::runtime_error("cannot open " + input_path);
      if (!std::getline(file, line)) throw std::runtime_error("empty input file");
    } else {
      if (!std::getline(in, line)) throw std::runtime_error("no graph on standard input");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return parse_graph6(line);
  }
};

std::string read_all(std::istream& in, const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

int run_check_lemmas(const std::string& only, bool as_json, std::ostream& out) {
  bool all_good = true;
  for (LemmaId id : {LemmaId::MinDegree, LemmaId::AdjacentTwo, LemmaId::Tool,
                     LemmaId::TwoNeighbor, LemmaId::SpecialN2}) {
    if (!only.empty() && lemma_name(id) != only) continue;
    for (const Configuration& config : build_lemma_configs(id)) {
      if (id == LemmaId::Tool) {
        ToolShapeReport report = check_tool_shapes(config);
        bool good = report.fully_classified();
        all_good = all_good && good;
        if (as_json) {
          nlohmann::ordered_json j;
          j["lemma"] = config.lemma;
          j["variant"] = config.variant;
          j["verdict"] = good ? "classified" : "unmatched-scenarios";
          j["scenarios"] = report.scenarios;
          j["direct_extendable"] = report.direct_extendable;
          j["repaired_locally"] = report.repaired_locally;
          j["shape_one"] = report.shape_one;
          j["shape_two"] = report.shape_two;
          j["counterexample"] = nullptr;
          out << j.dump() << "\n";
        } else {
          out << config.lemma << "/" << config.variant << " (" << config.label
              << "): scenarios=" << report.scenarios
              << " direct=" << report.direct_extendable
              << " repaired=" << report.repaired_locally
              << " shape1=" << report.shape_one << " shape2=" << report.shape_two
              << " unmatched=" << report.unmatched.size()
              << (good ? " [classified]" : " [FAIL]") << "\n";
        }
        continue;
      }
      CheckResult result = check_reducible(config);
      all_good = all_good && result.reducible;
      if (as_json) {
        nlohmann::ordered_json j;
        j["lemma"] = config.lemma;
        j["variant"] = config.variant;
        j["verdict"] = result.reducible ? "reducible" : "counterexample";
        j["scenarios"] = result.settled;
        j["leaves"] = result.leaves;
        j["pruned_subtrees"] = result.pruned;
        j["max_repair"] = result.max_repair_size;
        j["seconds"] = result.wall_seconds;
        if (result.counterexample) {
          j["counterexample"] = result.counterexample->classes;
        } else {
          j["counterexample"] = nullptr;
        }
        out << j.dump() << "\n";
      } else {
        out << config.lemma << "/" << config.variant << " (" << config.label
            << "): settled=" << result.settled << " leaves=" << result.leaves
            << " max_repair=" << result.max_repair_size
            << (result.reducible ? " [reducible]" : " [COUNTEREXAMPLE]") << "\n";
      }
    }
  }
  return all_good ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"packing coloring toolkit"};
  app.require_subcommand(1);

  GraphInput graph_input;
  std::string spec_text = "1,1,2,2";
  std::string coloring_path;
  long long budget = 50'000'000;
  int k_max = 8;
  bool witness_flag = false;
  bool edge_map_flag = false;
  std::string lemma_filter;
  bool json_flag = false;
  int enumerate_n = 0;
  std::string scan_input = "-";
  std::vector<std::string> filter_args;
  std::string format = "csv";
  int workers = 1;
  bool check_flag = false;
  bool timing_flag = false;

  CLI::App* color = app.add_subcommand("color", "find a packing coloring");
  graph_input.attach(color);
  color->add_option("--spec", spec_text, "packing spec, e.g. 1,1,2,2");
  color->add_option("--budget", budget, "decision budget");

  CLI::App* verify = app.add_subcommand("verify", "verify a packing coloring");
  graph_input.attach(verify);
  verify->add_option("--coloring", coloring_path, "coloring json file, or - for stdin")
      ->required();

  CLI::App* chip = app.add_subcommand("chi-p", "packing chromatic number");
  graph_input.attach(chip);
  chip->add_option("--k-max", k_max, "largest k to try");
  chip->add_option("--budget", budget, "decision budget");

  CLI::App* mad_cmd = app.add_subcommand("mad", "exact maximum average degree");
  graph_input.attach(mad_cmd);
  mad_cmd->add_flag("--witness", witness_flag, "also print a densest vertex set");

  CLI::App* girth_cmd = app.add_subcommand("girth", "shortest cycle length");
  graph_input.attach(girth_cmd);

  CLI::App* subdivide_cmd = app.add_subcommand("subdivide", "subdivide every edge");
  graph_input.attach(subdivide_cmd);
  subdivide_cmd->add_flag("--edge-map", edge_map_flag, "print edge vertex ids");

  CLI::App* lift = app.add_subcommand("lift", "carry a coloring to the subdivision");
  graph_input.attach(lift);
  lift->add_option("--coloring", coloring_path, "coloring json file, or - for stdin")
      ->required();

  CLI::App* discharge = app.add_subcommand("discharge", "initial and final charges");
  graph_input.attach(discharge);

  CLI::App* audit = app.add_subcommand("audit", "structural predicates");
  graph_input.attach(audit);

  CLI::App* lemmas = app.add_subcommand("check-lemmas", "verify the local lemmas");
  lemmas->add_option("--lemma", lemma_filter,
                     "min_degree, adjacent_two, tool, two_neighbor or special_n2");
  lemmas->add_flag("--json", json_flag, "one json object per configuration");

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "connected subcubic graphs up to isomorphism");
  enumerate_cmd->add_option("--n", enumerate_n, "vertex count, 1..10")->required();

  CLI::App* scan = app.add_subcommand("scan", "batch pipeline over graph6 lines");
  scan->add_option("--input", scan_input, "file with graph6 lines, or - for stdin");
  scan->add_option("--filter", filter_args,
                   "subcubic | connected | mad-lt=P/Q | girth-ge=K (repeatable)");
  scan->add_option("--spec", spec_text, "packing spec to solve");
  scan->add_option("--format", format, "csv or jsonl");
  scan->add_option("--workers", workers, "worker threads");
  scan->add_option("--budget", budget, "per-graph decision budget");
  scan->add_flag("--check", check_flag, "run the consistency summary (stderr)");
  scan->add_flag("--timing", timing_flag, "include elapsed_ms (non-deterministic)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 64;
  }

  try {
    if (color->parsed()) {
      Graph g = graph_input.resolve(in);
      PackingSpec spec = PackingSpec::parse(spec_text);
      SolveOptions options;
      options.decision_budget = budget;
      SolveResult result = solve(g, spec, options);
      if (result.status == SolveStatus::Satisfiable) {
        out << "SAT\n" << coloring_to_json(spec, result.coloring) << "\n";
        return 0;
      }
      if (result.status == SolveStatus::Unsatisfiable) {
        out << "UNSAT\n";
        return 0;
      }
      out << "BUDGET EXCEEDED\n";
      return 3;
    }
    if (verify->parsed()) {
      Graph g = graph_input.resolve(in);
      auto [spec, coloring] = coloring_from_json(read_all(in, coloring_path));
      auto violations = verify_coloring(g, spec, coloring);
      if (violations.empty()) {
        out << "OK\n";
        return 0;
      }
      for (const Violation& v : violations) {
        out << "violation class=" << v.cls << " pair=(" << v.u << "," << v.v
            << ") dist=" << v.distance << "\n";
      }
      out << "INVALID\n";
      return 1;
    }
    if (chip->parsed()) {
      Graph g = graph_input.resolve(in);
      SolveOptions options;
      options.decision_budget = budget;
      ChiPResult result = chi_p(g, k_max, options);
      if (result.status == ChiPResult::Status::Found) {
        out << result.value << "\n";
        return 0;
      }
      if (result.status == ChiPResult::Status::ExceedsKMax) {
        out << "exceeds " << k_max << "\n";
        return 0;
      }
      out << "BUDGET EXCEEDED\n";
      return 3;
    }
    if (mad_cmd->parsed()) {
      Graph g = graph_input.resolve(in);
      MadResult result = mad_exact(g);
      out << result.value.str() << "\n";
      if (witness_flag) {
        for (std::size_t i = 0; i < result.witness.size(); ++i) {
          out << (i ? " " : "") << result.witness[i];
        }
        out << "\n";
      }
      return 0;
    }
    if (girth_cmd->parsed()) {
      Graph g = graph_input.resolve(in);
      auto value = girth(g);
      if (value) {
        out << *value << "\n";
      } else {
        out << "acyclic\n";
      }
      return 0;
    }
    if (subdivide_cmd->parsed()) {
      Graph g = graph_input.resolve(in);
      Subdivision sub = subdivide(g);
      out << write_graph6(sub.graph) << "\n";
      if (edge_map_flag) {
        for (const auto& [edge, vertex] : sub.edge_vertex) {
          out << edge.first << " " << edge.second << " -> " << vertex << "\n";
        }
      }
      return 0;
    }
    if (lift->parsed()) {
      Graph g = graph_input.resolve(in);
      auto [spec, coloring] = coloring_from_json(read_all(in, coloring_path));
      LiftResult lifted = lift_subdivision(g, spec, coloring);
      nlohmann::ordered_json j;
      j["graph6"] = write_graph6(lifted.graph);
      j["spec"] = lifted.spec.values();
      j["classes"] = lifted.coloring.classes;
      out << j.dump() << "\n";
      return 0;
    }
    if (discharge->parsed()) {
      Graph g = graph_input.resolve(in);
      ChargeLedger initial = initial_charges(g);
      ChargeLedger final_ledger = apply_discharging(g, initial);
      for (int v = 0; v < g.order(); ++v) {
        out << v << " " << elevenths(initial.charge[v]) << " "
            << elevenths(final_ledger.charge[v]) << "\n";
      }
      out << "total " << elevenths(total_charge(initial)) << " "
          << elevenths(total_charge(final_ledger)) << "\n";
      return 0;
    }
    if (audit->parsed()) {
      Graph g = graph_input.resolve(in);
      StructuralReport report = structural_audit(g);
      auto print = [&](const char* name, bool ok,
                       const std::vector<std::vector<int>>& witnesses) {
        out << name << " " << (ok ? 1 : 0) << "\n";
        for (const auto& tuple : witnesses) {
          out << "  witness";
          for (int v : tuple) out << " " << v;
          out << "\n";
        }
      };
      print("min_degree_ok", report.min_degree_ok, report.min_degree_witnesses);
      print("no_adjacent_two_ok", report.no_adjacent_two_ok,
            report.adjacent_two_witnesses);
      print("two_neighbor_ok", report.two_neighbor_ok, report.two_neighbor_witnesses);
      print("special_in_n2_ok", report.special_in_n2_ok,
            report.special_in_n2_witnesses);
      return 0;
    }
    if (lemmas->parsed()) {
      return run_check_lemmas(lemma_filter, json_flag, out);
    }
    if (enumerate_cmd->parsed()) {
      for (const Graph& g : enumerate_connected_subcubic(enumerate_n)) {
        out << write_graph6(g) << "\n";
      }
      return 0;
    }
    if (scan->parsed()) {
      ScanOptions options;
      options.spec = PackingSpec::parse(spec_text);
      options.workers = workers;
      options.solver_budget = budget;
      for (const std::string& filter : filter_args) {
        if (filter == "subcubic") {
          options.filters.subcubic = true;
        } else if (filter == "connected") {
          options.filters.connected = true;
        } else if (filter.rfind("mad-lt=", 0) == 0) {
          options.filters.mad_lt = Rational::parse(filter.substr(7));
        } else if (filter.rfind("girth-ge=", 0) == 0) {
          options.filters.girth_ge = std::stoi(filter.substr(9));
        } else {
          throw std::invalid_argument("unknown filter: " + filter);
        }
      }
      std::vector<std::string> lines;
      if (scan_input == "-") {
        lines = read_graph6_lines(in);
      } else {
        std::ifstream file(scan_input);
        if (!file) throw std::runtime_error("cannot open " + scan_input);
        lines = read_graph6_lines(file);
      }
      std::vector<ScanRow> rows = scan_lines(lines, options);
      if (format == "csv") {
        out << scan_csv_header(timing_flag) << "\n";
        for (const ScanRow& row : rows) out << scan_row_csv(row, timing_flag) << "\n";
      } else if (format == "jsonl") {
        for (const ScanRow& row : rows) {
          out << scan_row_jsonl(row, options.spec, timing_flag) << "\n";
        }
      } else {
        throw std::invalid_argument("unknown format: " + format);
      }
      if (check_flag) {
        ConsistencySummary summary = theorem_consistency_check(rows);
        err << "consistency: rows=" << summary.rows
            << " charge_mismatch=" << summary.charge_sum_mismatch.size()
            << " negative_final=" << summary.negative_final.size()
            << " bound_contradiction=" << summary.bound_contradiction.size() << "\n";
        if (!summary.ok()) {
          for (const auto& s : summary.charge_sum_mismatch) err << "  charge " << s << "\n";
          for (const auto& s : summary.negative_final) err << "  negative " << s << "\n";
          for (const auto& s : summary.bound_contradiction) err << "  bound " << s << "\n";
          return 2;
        }
      }
      return scan_exit_code(rows);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 64;
}

}  // namespace packcol
