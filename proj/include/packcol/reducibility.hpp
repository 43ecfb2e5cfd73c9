#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "packcol/graph.hpp"

namespace packcol {

// Local fragments are checked against the fixed four-class spec with
// thresholds (1,1,2,2); classes 1,2 forbid equal colors at distance 1 and
// classes 3,4 forbid them at distance <= 2.

enum class ConfigRole { Deleted, Interior, Boundary };

// A rooted local fragment of a subcubic host graph.
//  - deleted vertices are the set removed before recoloring; their host
//    neighborhoods are fully visible (host_degree == local degree);
//  - interior vertices are fully visible as well;
//  - boundary vertices carry host_degree as an upper bound on their host
//    degree, the gap being stub edges to unseen vertices.
struct Configuration {
  Graph local;
  std::vector<ConfigRole> roles;
  std::vector<int> host_degree;
  std::string lemma;
  int variant = 0;
  std::string label;

  bool deleted(int v) const { return roles[v] == ConfigRole::Deleted; }
  std::vector<int> deleted_set() const;
  std::vector<int> interior_set() const;
};

// Throws std::invalid_argument when a structural invariant fails.
void validate_configuration(const Configuration& c);

enum class LemmaId { MinDegree, AdjacentTwo, Tool, TwoNeighbor, SpecialN2 };

LemmaId lemma_from_name(std::string_view name);
std::string lemma_name(LemmaId id);

// The negated-conclusion fragments for each structural statement, with
// the identification and adjacency variants the builders enumerate,
// deduplicated by role-aware isomorphism.
std::vector<Configuration> build_lemma_configs(LemmaId id);

// A locally admissible coloring of all non-deleted vertices (class per
// vertex, 0 on deleted ones). Admissibility is judged in the fragment
// minus its deleted vertices.
struct Scenario {
  std::vector<int> classes;
};

struct RepairStep {
  int vertex;
  int cls;
};

// Colors for the deleted vertices plus recolorings of other vertices;
// every changed vertex must have its relevance ball fully visible.
struct Repair {
  std::vector<RepairStep> steps;
};

struct CheckOptions {
  int max_recolor = -1;             // -1: all non-deleted subsets at leaves
  long long scenario_cap = 200'000'000;  // settled-node cap, hard failure
  long long leaf_work_cap = 50'000'000;  // per-leaf repair search budget
};

struct CheckResult {
  bool reducible = false;
  long long leaves = 0;        // fully assigned scenarios checked one by one
  long long pruned = 0;        // subtrees settled by a uniform repair
  long long settled = 0;       // leaves + pruned
  int max_repair_size = 0;     // largest recolor set any repair needed
  std::optional<Scenario> counterexample;
  double wall_seconds = 0.0;
};

// Reducible iff every scenario admits a safe repair. A subtree of the
// scenario enumeration may be settled wholesale when one repair is valid
// for every completion of the common prefix; otherwise scenarios are
// checked at the leaves, and the first failure in enumeration order is
// reported.
CheckResult check_reducible(const Configuration& c, const CheckOptions& options = {});

// Enumerates every admissible scenario exactly once modulo swapping the
// two threshold-1 classes and/or the two threshold-2 classes, in the
// engine's deterministic order. Throws when cap is exceeded.
void for_each_scenario(const Configuration& c,
                       const std::function<void(const Scenario&)>& fn,
                       long long cap = 10'000'000);
std::vector<Scenario> enumerate_scenarios(const Configuration& c,
                                          long long cap = 10'000'000);

// Repair search for one scenario: recolor sets are tried smallest first,
// ties in lexicographic vertex order. max_recolor < 0 means no limit;
// allowed_recolor, when given, restricts which vertices may be recolored.
std::optional<Repair> find_repair(const Configuration& c, const Scenario& s,
                                  int max_recolor = -1,
                                  const std::vector<int>* allowed_recolor = nullptr,
                                  long long work_cap = 50'000'000);

struct ToolShapeReport {
  long long scenarios = 0;
  long long direct_extendable = 0;   // the deleted 2-vertex takes a color as is
  long long repaired_locally = 0;    // rescued by recoloring a neighbor of it
  long long shape_one = 0;           // both neighbors carry the two 1-classes
  long long shape_two = 0;           // both neighbors share one 2-class
  std::vector<Scenario> unmatched;   // stuck scenarios outside both shapes
  bool fully_classified() const { return unmatched.empty(); }
};

// For the plain two-vertex fragment (deleted 2-vertex v between two
// 3-vertices u, w with distinct outer neighbors): classifies every
// scenario that survives coloring v and recoloring u/w into the two
// stuck shapes, side conditions included.
ToolShapeReport check_tool_shapes(const Configuration& c);

}  // namespace packcol
