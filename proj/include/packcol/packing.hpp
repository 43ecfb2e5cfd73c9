#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "packcol/graph.hpp"

namespace packcol {

// Non-decreasing sequence of positive integers; class i (1-based) demands
// pairwise distance >= s_i + 1 between its vertices.
class PackingSpec {
 public:
  explicit PackingSpec(std::vector<int> thresholds);

  int size() const { return static_cast<int>(s_.size()); }
  int threshold(int cls) const { return s_[cls - 1]; }  // cls in 1..k
  int max_threshold() const { return s_.back(); }
  const std::vector<int>& values() const { return s_; }

  static PackingSpec parse(std::string_view csv);  // "1,1,2,2"
  std::string str() const;

  friend bool operator==(const PackingSpec&, const PackingSpec&) = default;

 private:
  std::vector<int> s_;
};

// Class per vertex, 1..k; 0 marks an uncolored vertex of a partial map.
struct PackingColoring {
  std::vector<int> classes;
  bool total() const {
    for (int c : classes) {
      if (c == 0) return false;
    }
    return true;
  }
};

struct Violation {
  int cls;
  int u;
  int v;
  int distance;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Empty result iff c is a packing coloring of g under spec. Violating
// pairs are reported ordered by (class, u, v). Throws when c is not a
// total assignment into 1..k over exactly V(g).
std::vector<Violation> verify_coloring(const Graph& g, const PackingSpec& spec,
                                       const PackingColoring& c);

enum class SolveStatus { Satisfiable, Unsatisfiable, BudgetExceeded };

struct SolveOptions {
  long long decision_budget = 50'000'000;
  // When set, ties in the vertex order are shuffled and the search runs
  // in geometrically growing restart slices. Off by default.
  std::optional<std::uint64_t> seed;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Unsatisfiable;
  PackingColoring coloring;  // populated iff Satisfiable
  long long decisions = 0;
};

// Depth-first backtracking over vertices in descending-degree order with
// forward checking; equal-threshold classes are opened in index order.
SolveResult solve(const Graph& g, const PackingSpec& spec,
                  const SolveOptions& options = {});

struct ChiPResult {
  enum class Status { Found, ExceedsKMax, SolverBudget };
  Status status = Status::ExceedsKMax;
  int value = 0;  // valid iff Found
};

// Smallest k <= k_max such that g has a packing (1,2,...,k)-coloring.
ChiPResult chi_p(const Graph& g, int k_max, const SolveOptions& options = {});

struct LiftResult {
  Graph graph;            // the subdivision D(g)
  PackingSpec spec;       // (1, 2s_1+1, ..., 2s_k+1)
  PackingColoring coloring;
  std::vector<int> class_map;  // original class i (1-based) -> lifted class
  int subdivision_class = 1;   // class carried by every new edge vertex
  std::map<std::pair<int, int>, int> edge_vertex;
};

// Transports a valid (g, spec) coloring to the subdivision: edge vertices
// take the threshold-1 class, originals keep their class at threshold
// 2s_i+1. Throws if the input coloring does not verify.
LiftResult lift_subdivision(const Graph& g, const PackingSpec& spec,
                            const PackingColoring& c);

// True iff the specs have equal length and a_i >= b_i componentwise, in
// which case any packing a-coloring is also a packing b-coloring under
// the index identification.
bool spec_dominates(const PackingSpec& a, const PackingSpec& b);

// JSON object {"spec":[...],"classes":[...]} with 1-based class indices.
std::string coloring_to_json(const PackingSpec& spec, const PackingColoring& c);
std::pair<PackingSpec, PackingColoring> coloring_from_json(std::string_view text);

}  // namespace packcol
