#include "packcol/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <istream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "packcol/graph6.hpp"

namespace packcol {

namespace {

ScanRow scan_one(const std::string& line, const ScanOptions& options,
                 bool* passed) {
  auto start = std::chrono::steady_clock::now();
  Graph g = parse_graph6(line);
  ScanRow row;
  *passed = false;
  const ScanFilters& f = options.filters;
  if (f.subcubic && g.max_degree() > 3) return row;
  if (f.connected && !g.connected()) return row;
  row.graph6 = write_graph6(g);
  row.n = g.order();
  row.m = g.size();
  row.girth = girth(g);
  if (f.girth_ge && (!row.girth || *row.girth < *f.girth_ge)) return row;
  row.mad = g.order() > 0 ? mad_exact(g).value : Rational(0);
  if (f.mad_lt && !(row.mad < *f.mad_lt)) return row;
  *passed = true;

  SolveOptions solve_options;
  solve_options.decision_budget = options.solver_budget;
  SolveResult solved = solve(g, options.spec, solve_options);
  row.colorable = solved.status == SolveStatus::Satisfiable;
  row.budget_exceeded = solved.status == SolveStatus::BudgetExceeded;
  if (row.colorable) row.witness = solved.coloring;

  if (g.max_degree() <= 3) row.structural = structural_audit(g);
  ChargeLedger final_ledger = apply_discharging(g, initial_charges(g));
  row.total_charge = total_charge(final_ledger);
  row.min_final_charge = final_ledger.charge.empty()
                             ? Rational(0)
                             : *std::min_element(final_ledger.charge.begin(),
                                                 final_ledger.charge.end());
  row.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                start)
          .count();
  return row;
}

}  // namespace

std::vector<std::string> read_graph6_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::vector<ScanRow> scan_lines(const std::vector<std::string>& lines,
                                const ScanOptions& options) {
  int workers = std::max(1, options.workers);
  std::vector<std::optional<ScanRow>> slots(lines.size());
  std::vector<std::string> errors(lines.size());
  std::atomic<std::size_t> cursor{0};
  std::atomic<bool> failed{false};

  auto work = [&]() {
    for (;;) {
      std::size_t index = cursor.fetch_add(1);
      if (index >= lines.size()) return;
      try {
        bool passed = false;
        ScanRow row = scan_one(lines[index], options, &passed);
        if (passed) slots[index] = std::move(row);
      } catch (const std::exception& e) {
        errors[index] = e.what();
        failed = true;
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failed) {
    for (std::size_t i = 0; i < errors.size(); ++i) {
      if (!errors[i].empty()) {
        throw std::runtime_error("scan: line " + std::to_string(i + 1) + ": " +
                                 errors[i]);
      }
    }
  }
  std::vector<ScanRow> rows;
  for (auto& slot : slots) {
    if (slot) rows.push_back(std::move(*slot));
  }
  return rows;
}

int scan_exit_code(const std::vector<ScanRow>& rows) {
  bool budget = false;
  for (const ScanRow& row : rows) {
    if (!row.colorable && !row.budget_exceeded && row.mad < charge_baseline() &&
        row.structural) {
      return 2;
    }
    budget = budget || row.budget_exceeded;
  }
  return budget ? 3 : 0;
}

namespace {

std::string girth_str(const std::optional<int>& g) {
  return g ? std::to_string(*g) : std::string("acyclic");
}

}  // namespace

std::string scan_csv_header(bool timing) {
  std::string header =
      "graph6,n,m,mad,girth,colorable,budget_exceeded,min_degree_ok,"
      "no_adjacent_two_ok,two_neighbor_ok,special_in_n2_ok,min_final_charge,"
      "total_charge";
  if (timing) header += ",elapsed_ms";
  return header;
}

std::string scan_row_csv(const ScanRow& row, bool timing) {
  std::string out = row.graph6;
  out += "," + std::to_string(row.n) + "," + std::to_string(row.m);
  out += "," + row.mad.str() + "," + girth_str(row.girth);
  out += row.colorable ? ",1" : ",0";
  out += row.budget_exceeded ? ",1" : ",0";
  if (row.structural) {
    out += row.structural->min_degree_ok ? ",1" : ",0";
    out += row.structural->no_adjacent_two_ok ? ",1" : ",0";
    out += row.structural->two_neighbor_ok ? ",1" : ",0";
    out += row.structural->special_in_n2_ok ? ",1" : ",0";
  } else {
    out += ",,,,";
  }
  out += "," + elevenths(row.min_final_charge) + "," + elevenths(row.total_charge);
  if (timing) out += "," + std::to_string(row.elapsed_ms);
  return out;
}

std::string scan_row_jsonl(const ScanRow& row, const PackingSpec& spec,
                           bool timing) {
  nlohmann::ordered_json j;
  j["graph6"] = row.graph6;
  j["n"] = row.n;
  j["m"] = row.m;
  j["mad"] = row.mad.str();
  if (row.girth) {
    j["girth"] = *row.girth;
  } else {
    j["girth"] = "acyclic";
  }
  j["colorable"] = row.colorable;
  j["budget_exceeded"] = row.budget_exceeded;
  if (row.witness) {
    j["witness"] = nlohmann::ordered_json{{"spec", spec.values()},
                                          {"classes", row.witness->classes}};
  } else {
    j["witness"] = nullptr;
  }
  if (row.structural) {
    j["structural"] = nlohmann::ordered_json{
        {"min_degree_ok", row.structural->min_degree_ok},
        {"no_adjacent_two_ok", row.structural->no_adjacent_two_ok},
        {"two_neighbor_ok", row.structural->two_neighbor_ok},
        {"special_in_n2_ok", row.structural->special_in_n2_ok}};
  } else {
    j["structural"] = nullptr;
  }
  j["min_final_charge"] = elevenths(row.min_final_charge);
  j["total_charge"] = elevenths(row.total_charge);
  if (timing) j["elapsed_ms"] = row.elapsed_ms;
  return j.dump();
}

ConsistencySummary theorem_consistency_check(const std::vector<ScanRow>& rows) {
  ConsistencySummary summary;
  for (const ScanRow& row : rows) {
    ++summary.rows;
    Rational expected = Rational(2 * row.m) - Rational(row.n) * charge_baseline();
    if (row.total_charge != expected) {
      summary.charge_sum_mismatch.push_back(row.graph6);
    }
    if (row.structural && row.structural->all_ok()) {
      if (row.min_final_charge < Rational(0)) {
        summary.negative_final.push_back(row.graph6);
      }
      if (row.mad < charge_baseline()) {
        summary.bound_contradiction.push_back(row.graph6);
      }
    }
  }
  return summary;
}

}  // namespace packcol
