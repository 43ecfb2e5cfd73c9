#include "packcol/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace packcol {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph: negative order");
  adj_.assign(n, {});
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("graph: endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("graph: self-loop");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw std::invalid_argument("graph: duplicate edge");
    }
  }
  m_ = static_cast<int>(edge_list.size());
}

bool Graph::adjacent(int u, int v) const {
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj_[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n_;
}

DistanceTable distances_within(const Graph& g, int source, int radius) {
  if (source < 0 || source >= g.order()) {
    throw std::invalid_argument("distances_within: source out of range");
  }
  if (radius < 0) throw std::invalid_argument("distances_within: negative radius");
  DistanceTable table{source, radius, {}};
  table.dist[source] = 0;
  std::queue<int> queue;
  queue.push(source);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    int d = table.dist[v];
    if (d == radius) continue;
    for (int u : g.neighbors(v)) {
      if (!table.dist.count(u)) {
        table.dist[u] = d + 1;
        queue.push(u);
      }
    }
  }
  return table;
}

std::vector<int> ring_at(const Graph& g, int v, int d) {
  if (d < 1) throw std::invalid_argument("ring_at: d must be >= 1");
  DistanceTable table = distances_within(g, v, d);
  std::vector<int> out;
  for (auto [u, du] : table.dist) {
    if (du == d) out.push_back(u);
  }
  return out;  // map iteration is already ascending
}

std::optional<int> girth(const Graph& g) {
  // Shortest cycle through each edge: remove the edge, then the distance
  // between its endpoints plus one is the cycle length.
  std::optional<int> best;
  for (auto [a, b] : g.edges()) {
    std::vector<int> dist(g.order(), -1);
    std::queue<int> queue;
    dist[a] = 0;
    queue.push(a);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      if (v == b) break;
      for (int u : g.neighbors(v)) {
        if (v == a && u == b) continue;  // skip the removed edge
        if (u == a && v == b) continue;
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          queue.push(u);
        }
      }
    }
    if (dist[b] >= 0 && (!best || dist[b] + 1 < *best)) best = dist[b] + 1;
  }
  return best;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  int n = g.order();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    dist[s][s] = 0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int u : g.neighbors(v)) {
        if (dist[s][u] < 0) {
          dist[s][u] = dist[s][v] + 1;
          queue.push(u);
        }
      }
    }
  }
  return dist;
}

Subdivision subdivide(const Graph& g) {
  Subdivision result;
  auto original = g.edges();
  int n = g.order();
  std::vector<std::pair<int, int>> edge_list;
  edge_list.reserve(2 * original.size());
  int next = n;
  for (auto [u, v] : original) {
    result.edge_vertex[{u, v}] = next;
    edge_list.emplace_back(u, next);
    edge_list.emplace_back(next, v);
    ++next;
  }
  result.graph = Graph(n + static_cast<int>(original.size()), edge_list);
  return result;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path: n must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("complete: n must be in 1..4");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph petersen_graph() {
  // Vertices are the 2-subsets of {0..4} in lexicographic order; edges join
  // disjoint pairs.
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 10; ++i) {
    for (int j = i + 1; j < 10; ++j) {
      auto [a, b] = subsets[i];
      auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d) edges.emplace_back(i, j);
    }
  }
  return Graph(10, edges);
}

Graph prism_graph(int n) {
  if (n < 3) throw std::invalid_argument("prism: n must be >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(n + i, n + (i + 1) % n);
    edges.emplace_back(i, n + i);
  }
  return Graph(2 * n, edges);
}

void check_graph_invariants(const Graph& g) {
  long long degree_sum = 0;
  for (int v = 0; v < g.order(); ++v) {
    auto nbrs = g.neighbors(v);
    degree_sum += static_cast<long long>(nbrs.size());
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      int u = nbrs[i];
      if (u == v) throw std::logic_error("invariant: self-loop");
      if (u < 0 || u >= g.order()) throw std::logic_error("invariant: range");
      if (i > 0 && nbrs[i - 1] >= u) throw std::logic_error("invariant: unsorted");
      if (!g.adjacent(u, v)) throw std::logic_error("invariant: asymmetric");
    }
  }
  if (degree_sum != 2LL * g.size()) throw std::logic_error("invariant: edge count");
}

}  // namespace packcol
