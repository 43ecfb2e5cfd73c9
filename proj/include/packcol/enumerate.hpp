#pragma once

#include <cstdint>
#include <vector>

#include "packcol/graph.hpp"

namespace packcol {

// Canonical adjacency code for graphs on at most 11 vertices: the
// lexicographically smallest upper-triangle bit string (column-major,
// first pair in the most significant position) over all relabelings
// compatible with the equitable degree refinement of the graph.
std::uint64_t canonical_code(const Graph& g);

// Rebuilds the graph encoded by canonical_code's bit order.
Graph graph_from_code(int n, std::uint64_t code);

// Exactly one representative per isomorphism class of connected graphs
// on n vertices with maximum degree <= 3, in ascending canonical-code
// order. The built-in budget is n <= 10; larger orders are meant to be
// ingested externally as graph6 lines.
std::vector<Graph> enumerate_connected_subcubic(int n);

}  // namespace packcol
