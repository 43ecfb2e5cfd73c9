#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "packcol/density.hpp"
#include "packcol/graph.hpp"
#include "packcol/packing.hpp"
#include "packcol/rational.hpp"

namespace packcol {

struct ScanFilters {
  bool subcubic = false;
  bool connected = false;
  std::optional<Rational> mad_lt;
  std::optional<int> girth_ge;
};

struct ScanRow {
  std::string graph6;
  int n = 0;
  int m = 0;
  Rational mad;
  std::optional<int> girth;  // nullopt: acyclic
  bool colorable = false;
  bool budget_exceeded = false;
  std::optional<PackingColoring> witness;      // present iff colorable
  std::optional<StructuralReport> structural;  // absent for non-subcubic rows
  Rational total_charge;
  Rational min_final_charge;
  double elapsed_ms = 0.0;
};

struct ScanOptions {
  PackingSpec spec{{1, 1, 2, 2}};
  ScanFilters filters;
  int workers = 1;
  long long solver_budget = 50'000'000;
};

// One row per input graph passing the filters, in input order regardless
// of the worker count. Decode failures abort with the line number.
std::vector<ScanRow> scan_lines(const std::vector<std::string>& lines,
                                const ScanOptions& options);
std::vector<std::string> read_graph6_lines(std::istream& in);

// Exit status for a finished scan: 0 clean, 2 when a graph below the
// 30/11 density bound failed to color (a theorem contradiction), 3 when
// any row exhausted the solver budget.
int scan_exit_code(const std::vector<ScanRow>& rows);

std::string scan_csv_header(bool timing = false);
std::string scan_row_csv(const ScanRow& row, bool timing = false);
std::string scan_row_jsonl(const ScanRow& row, const PackingSpec& spec,
                           bool timing = false);

struct ConsistencySummary {
  long long rows = 0;
  std::vector<std::string> charge_sum_mismatch;   // graph6 strings
  std::vector<std::string> negative_final;        // all-true report, charge < 0
  std::vector<std::string> bound_contradiction;   // all-true report, mad < 30/11
  bool ok() const {
    return charge_sum_mismatch.empty() && negative_final.empty() &&
           bound_contradiction.empty();
  }
};

// Per-row exact checks: the initial charge total equals 2m - 30n/11, an
// all-true structural report forces nonnegative final charges, and no
// all-true row may sit below the 30/11 bound.
ConsistencySummary theorem_consistency_check(const std::vector<ScanRow>& rows);

}  // namespace packcol
