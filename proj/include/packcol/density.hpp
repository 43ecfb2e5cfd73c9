#pragma once

#include <string>
#include <vector>

#include "packcol/graph.hpp"
#include "packcol/rational.hpp"

namespace packcol {

// The density threshold used by the discharging argument and the scan
// filter; initial charges are d(v) minus this value.
inline Rational charge_baseline() { return Rational(30, 11); }

struct MadResult {
  Rational value;
  std::vector<int> witness;  // a maximizing vertex set, sorted
};

// Exact maximum of 2|E(G[S])|/|S| over nonempty S. Candidate densities
// p/q with q <= n are binary-searched with an integer max-flow
// feasibility test per candidate, so no floating point is involved.
MadResult mad_exact(const Graph& g);

// Independent oracle: exhaustive enumeration of induced subgraphs (n <= 20).
Rational mad_bruteforce(const Graph& g);

// 2g/(g-2), the density bound implied by planarity at the given girth.
Rational planar_mad_bound(int girth);

enum class ChargeStage { Initial, Final };

struct ChargeTransfer {
  int rule;  // 1 or 2
  int from;
  int to;
  Rational amount;
};

struct ChargeLedger {
  ChargeStage stage = ChargeStage::Initial;
  std::vector<Rational> charge;
  std::vector<ChargeTransfer> transfers;
};

Rational total_charge(const ChargeLedger& ledger);

// charge[v] = d(v) - 30/11, stage Initial.
ChargeLedger initial_charges(const Graph& g);

// Applies the two redistribution rules and returns the Final ledger:
//   R1: each special 3-vertex gives 1/11 to each 2-vertex at distance
//       exactly two (once per vertex regardless of path multiplicity);
//   R2: each non-special 3-vertex gives 3/11 to each 2-neighbor.
// Throws if the ledger is not at the Initial stage for g.
ChargeLedger apply_discharging(const Graph& g, const ChargeLedger& ledger);

// A 3-vertex all of whose neighbors are 3-vertices.
bool is_special_three_vertex(const Graph& g, int v);

struct StructuralReport {
  bool min_degree_ok = true;       // every vertex has degree >= 2
  bool no_adjacent_two_ok = true;  // no edge joins two 2-vertices
  bool two_neighbor_ok = true;     // every 3-vertex has at most one 2-neighbor
  bool special_in_n2_ok = true;    // every 2-vertex sees >= 2 special
                                   // 3-vertices at distance exactly two
  std::vector<std::vector<int>> min_degree_witnesses;
  std::vector<std::vector<int>> adjacent_two_witnesses;
  std::vector<std::vector<int>> two_neighbor_witnesses;
  std::vector<std::vector<int>> special_in_n2_witnesses;
  bool all_ok() const {
    return min_degree_ok && no_adjacent_two_ok && two_neighbor_ok && special_in_n2_ok;
  }
};

// Evaluates the four predicates above. Requires max degree <= 3.
StructuralReport structural_audit(const Graph& g);

// Charges are always integer multiples of 1/11; render as "p/11".
std::string elevenths(const Rational& value);

}  // namespace packcol
