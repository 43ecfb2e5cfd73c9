#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace packcol {

// Immutable simple undirected graph over dense vertex ids 0..n-1.
// Adjacency lists are sorted ascending; construction rejects loops,
// duplicate edges and out-of-range endpoints. All operations treat a
// Graph as a value, so instances are safe to share across threads.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

  int order() const { return n_; }
  int size() const { return m_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  std::span<const int> neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;  // (u < v), sorted
  int max_degree() const;
  bool connected() const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

struct DistanceTable {
  int source = 0;
  int radius = 0;
  std::map<int, int> dist;  // present iff distance <= radius
};

// Truncated breadth-first distances from source.
DistanceTable distances_within(const Graph& g, int source, int radius);

// Vertices at distance exactly d from v, sorted ascending. Requires d >= 1.
std::vector<int> ring_at(const Graph& g, int v, int d);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// BFS from every vertex; -1 marks unreachable pairs.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

struct Subdivision {
  Graph graph;  // original ids preserved, edge vertices get n..n+m-1
  std::map<std::pair<int, int>, int> edge_vertex;
};

// Replace every edge {u,v} by a path u-x-v with a fresh vertex x.
// Fresh ids are assigned in sorted-edge order.
Subdivision subdivide(const Graph& g);

Graph cycle_graph(int n);     // n >= 3
Graph path_graph(int n);      // n >= 1
Graph complete_graph(int n);  // 1 <= n <= 4
Graph petersen_graph();       // Kneser graph K(5,2)
Graph prism_graph(int n);     // C_n x K_2, n >= 3

// Re-validates the representation through the public API (test support).
void check_graph_invariants(const Graph& g);

}  // namespace packcol
