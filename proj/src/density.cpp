#include "packcol/density.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace packcol {

namespace {

// Dinic max-flow with 64-bit capacities; private per-call state.
struct MaxFlow {
  struct Edge {
    int to;
    long long cap;
    int rev;
  };
  std::vector<std::vector<Edge>> adj;
  std::vector<int> level, iter;

  explicit MaxFlow(int n) : adj(n), level(n), iter(n) {}

  void add_edge(int from, int to, long long cap) {
    adj[from].push_back({to, cap, static_cast<int>(adj[to].size())});
    adj[to].push_back({from, 0, static_cast<int>(adj[from].size()) - 1});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> queue;
    level[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (const Edge& e : adj[v]) {
        if (e.cap > 0 && level[e.to] < 0) {
          level[e.to] = level[v] + 1;
          queue.push(e.to);
        }
      }
    }
    return level[t] >= 0;
  }

  long long dfs(int v, int t, long long limit) {
    if (v == t) return limit;
    for (int& i = iter[v]; i < static_cast<int>(adj[v].size()); ++i) {
      Edge& e = adj[v][i];
      if (e.cap > 0 && level[v] < level[e.to]) {
        long long pushed = dfs(e.to, t, std::min(limit, e.cap));
        if (pushed > 0) {
          e.cap -= pushed;
          adj[e.to][e.rev].cap += pushed;
          return pushed;
        }
      }
    }
    return 0;
  }

  long long run(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
      std::fill(iter.begin(), iter.end(), 0);
      while (long long pushed = dfs(s, t, std::numeric_limits<long long>::max())) {
        flow += pushed;
      }
    }
    return flow;
  }

  std::vector<char> source_side(int s) {
    std::vector<char> seen(adj.size(), 0);
    std::queue<int> queue;
    seen[s] = 1;
    queue.push(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (const Edge& e : adj[v]) {
        if (e.cap > 0 && !seen[e.to]) {
          seen[e.to] = 1;
          queue.push(e.to);
        }
      }
    }
    return seen;
  }
};

// Does some nonempty S achieve e(S)/|S| > p/q? The network has a node per
// edge (supplied q from the source) and a node per vertex (draining p to
// the sink); a cut below q*m certifies such an S on the source side.
bool density_feasible(const Graph& g, long long p, long long q,
                      std::vector<int>* witness) {
  int m = g.size();
  int n = g.order();
  int source = 0, sink = 1 + m + n;
  MaxFlow flow(m + n + 2);
  long long inf = q * static_cast<long long>(m) + 1;
  auto edge_list = g.edges();
  for (int e = 0; e < m; ++e) {
    flow.add_edge(source, 1 + e, q);
    flow.add_edge(1 + e, 1 + m + edge_list[e].first, inf);
    flow.add_edge(1 + e, 1 + m + edge_list[e].second, inf);
  }
  for (int v = 0; v < n; ++v) flow.add_edge(1 + m + v, sink, p);
  long long value = flow.run(source, sink);
  if (value >= q * static_cast<long long>(m)) return false;
  if (witness) {
    witness->clear();
    auto side = flow.source_side(source);
    for (int v = 0; v < n; ++v) {
      if (side[1 + m + v]) witness->push_back(v);
    }
  }
  return true;
}

}  // namespace

MadResult mad_exact(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("mad_exact: empty graph");
  if (g.size() == 0) return {Rational(0), {0}};
  int n = g.order();
  int m = g.size();
  std::vector<Rational> candidates;
  candidates.reserve(static_cast<std::size_t>(n) * (m + 1));
  for (int q = 1; q <= n; ++q) {
    for (int p = 0; p <= m; ++p) candidates.emplace_back(p, q);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  // The maximum density is the first candidate whose strict-improvement
  // test fails; the run at its predecessor yields a maximizing set.
  std::size_t lo = 0, hi = candidates.size() - 1;
  // candidates[0] == 0 is feasible (m >= 1); the last is not.
  while (lo + 1 < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (density_feasible(g, candidates[mid].num(), candidates[mid].den(), nullptr)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  std::vector<int> witness;
  density_feasible(g, candidates[lo].num(), candidates[lo].den(), &witness);
  return {Rational(2) * candidates[hi], witness};
}

Rational mad_bruteforce(const Graph& g) {
  int n = g.order();
  if (n == 0) throw std::invalid_argument("mad_bruteforce: empty graph");
  if (n > 20) throw std::invalid_argument("mad_bruteforce: order > 20");
  auto edge_list = g.edges();
  Rational best(0);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int inside = 0;
    for (auto [u, v] : edge_list) {
      if (((mask >> u) & 1u) && ((mask >> v) & 1u)) ++inside;
    }
    Rational density(2 * inside, __builtin_popcount(mask));
    if (density > best) best = density;
  }
  return best;
}

Rational planar_mad_bound(int girth) {
  if (girth < 3) throw std::invalid_argument("planar_mad_bound: girth < 3");
  return Rational(2 * girth, girth - 2);
}

Rational total_charge(const ChargeLedger& ledger) {
  Rational sum(0);
  for (const Rational& c : ledger.charge) sum += c;
  return sum;
}

ChargeLedger initial_charges(const Graph& g) {
  ChargeLedger ledger;
  ledger.stage = ChargeStage::Initial;
  ledger.charge.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) {
    ledger.charge.push_back(Rational(g.degree(v)) - charge_baseline());
  }
  return ledger;
}

bool is_special_three_vertex(const Graph& g, int v) {
  if (g.degree(v) != 3) return false;
  for (int u : g.neighbors(v)) {
    if (g.degree(u) != 3) return false;
  }
  return true;
}

ChargeLedger apply_discharging(const Graph& g, const ChargeLedger& ledger) {
  if (ledger.stage != ChargeStage::Initial) {
    throw std::invalid_argument("apply_discharging: ledger not at initial stage");
  }
  if (static_cast<int>(ledger.charge.size()) != g.order()) {
    throw std::invalid_argument("apply_discharging: ledger size mismatch");
  }
  ChargeLedger out = ledger;
  out.stage = ChargeStage::Final;
  for (int v = 0; v < g.order(); ++v) {
    if (!is_special_three_vertex(g, v)) continue;
    for (int u : ring_at(g, v, 2)) {
      if (g.degree(u) != 2) continue;
      Rational amount(1, 11);
      out.charge[v] -= amount;
      out.charge[u] += amount;
      out.transfers.push_back({1, v, u, amount});
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3 || is_special_three_vertex(g, v)) continue;
    for (int u : g.neighbors(v)) {
      if (g.degree(u) != 2) continue;
      Rational amount(3, 11);
      out.charge[v] -= amount;
      out.charge[u] += amount;
      out.transfers.push_back({2, v, u, amount});
    }
  }
  return out;
}

StructuralReport structural_audit(const Graph& g) {
  if (g.max_degree() > 3) {
    throw std::invalid_argument("structural_audit: graph is not subcubic");
  }
  StructuralReport report;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) {
      report.min_degree_ok = false;
      report.min_degree_witnesses.push_back({v});
    }
  }
  for (auto [u, v] : g.edges()) {
    if (g.degree(u) == 2 && g.degree(v) == 2) {
      report.no_adjacent_two_ok = false;
      report.adjacent_two_witnesses.push_back({u, v});
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) continue;
    std::vector<int> twos;
    for (int u : g.neighbors(v)) {
      if (g.degree(u) == 2) twos.push_back(u);
    }
    if (twos.size() > 1) {
      report.two_neighbor_ok = false;
      std::vector<int> witness{v};
      witness.insert(witness.end(), twos.begin(), twos.end());
      report.two_neighbor_witnesses.push_back(witness);
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) continue;
    int specials = 0;
    for (int u : ring_at(g, v, 2)) {
      if (is_special_three_vertex(g, u)) ++specials;
    }
    if (specials < 2) {
      report.special_in_n2_ok = false;
      report.special_in_n2_witnesses.push_back({v});
    }
  }
  return report;
}

std::string elevenths(const Rational& value) {
  if (11 % value.den() != 0) {
    throw std::invalid_argument("elevenths: value is not a multiple of 1/11");
  }
  return std::to_string(value.num() * (11 / value.den())) + "/11";
}

}  // namespace packcol
