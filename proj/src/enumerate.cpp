#include "packcol/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

namespace packcol {

namespace {

constexpr int kCodeLimit = 11;  // 55 pair bits fit a uint64

// Equitable partition by iterated refinement: vertices start in cells
// ordered by degree, then cells split on the multiset of neighbor cell
// indices until stable. Cell order derives from invariant data only, so
// isomorphic graphs refine to matching ordered partitions.
std::vector<std::vector<int>> refine_cells(const Graph& g) {
  int n = g.order();
  std::vector<int> cell_of(n, 0);
  std::vector<std::vector<int>> cells;
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) < g.degree(b); });
  for (int v : order) {
    if (cells.empty() || g.degree(cells.back().front()) != g.degree(v)) {
      cells.push_back({});
    }
    cells.back().push_back(v);
  }
  for (;;) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
    }
    std::vector<std::vector<int>> next;
    for (const auto& cell : cells) {
      std::vector<std::pair<std::vector<int>, int>> tagged;
      for (int v : cell) {
        std::vector<int> sig(cells.size(), 0);
        for (int u : g.neighbors(v)) ++sig[cell_of[u]];
        tagged.emplace_back(std::move(sig), v);
      }
      std::stable_sort(tagged.begin(), tagged.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      std::size_t start = 0;
      for (std::size_t i = 1; i <= tagged.size(); ++i) {
        if (i == tagged.size() || tagged[i].first != tagged[start].first) {
          next.push_back({});
          for (std::size_t j = start; j < i; ++j) next.back().push_back(tagged[j].second);
          start = i;
        }
      }
    }
    bool stable = next.size() == cells.size();
    cells = std::move(next);
    if (stable) break;
  }
  return cells;
}

constexpr std::uint64_t kBlockMax = std::numeric_limits<std::uint64_t>::max();

// Branch-and-bound over relabelings that respect the refinement cells,
// minimizing the per-position column bit blocks lexicographically.
struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<int> position_cell;
  std::vector<std::vector<int>> cells;
  std::vector<char> used;
  std::vector<int> perm;
  std::vector<std::uint64_t> best;

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {
    cells = refine_cells(graph);
    used.assign(n, 0);
    perm.assign(n, -1);
    best.assign(n, kBlockMax);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (std::size_t i = 0; i < cells[c].size(); ++i) {
        position_cell.push_back(static_cast<int>(c));
      }
    }
  }

  void descend(int pos) {
    if (pos == n) return;  // best[] already equals this assignment's blocks
    for (int v : cells[position_cell[pos]]) {
      if (used[v]) continue;
      std::uint64_t bits = 0;
      for (int p = 0; p < pos; ++p) {
        bits = (bits << 1) | (g.adjacent(perm[p], v) ? 1u : 0u);
      }
      if (bits > best[pos]) continue;
      if (bits < best[pos]) {
        // Strictly better prefix: the old tail belongs to a worse branch,
        // reset it so the subtree establishes the minimum for this prefix.
        best[pos] = bits;
        std::fill(best.begin() + pos + 1, best.end(), kBlockMax);
      }
      used[v] = 1;
      perm[pos] = v;
      descend(pos + 1);
      used[v] = 0;
    }
  }
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  int n = g.order();
  if (n > kCodeLimit) throw std::invalid_argument("canonical_code: order > 11");
  if (n <= 1) return 0;
  CanonSearch search(g);
  search.descend(0);
  std::uint64_t code = 0;
  int shift = 63;
  for (int pos = 1; pos < n; ++pos) {
    for (int bit = pos - 1; bit >= 0; --bit, --shift) {
      code |= ((search.best[pos] >> bit) & 1u) << shift;
    }
  }
  return code;
}

Graph graph_from_code(int n, std::uint64_t code) {
  std::vector<std::pair<int, int>> edges;
  int shift = 63;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, --shift) {
      if ((code >> shift) & 1u) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

std::vector<Graph> enumerate_connected_subcubic(int n) {
  if (n < 1 || n > 10) {
    throw std::invalid_argument(
        "enumerate_connected_subcubic: order " + std::to_string(n) +
        " is outside the built-in budget 1..10; ingest graph6 lines instead");
  }
  std::vector<std::uint64_t> level{0};  // K1
  for (int k = 2; k <= n; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      Graph g = graph_from_code(k - 1, code);
      auto base_edges = g.edges();
      // Attach a fresh vertex to every admissible nonempty subset: every
      // connected graph has a non-cut vertex, so this reaches every class.
      for (int mask = 1; mask < (1 << (k - 1)); ++mask) {
        if (__builtin_popcount(mask) > 3) continue;
        bool ok = true;
        auto edges = base_edges;
        for (int v = 0; v < k - 1 && ok; ++v) {
          if ((mask >> v) & 1) {
            if (g.degree(v) >= 3) ok = false;
            edges.emplace_back(v, k - 1);
          }
        }
        if (!ok) continue;
        next.insert(canonical_code(Graph(k, edges)));
      }
    }
    level.assign(next.begin(), next.end());
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (std::uint64_t code : level) out.push_back(graph_from_code(n, code));
  return out;
}

}  // namespace packcol
