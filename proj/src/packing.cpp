#include "packcol/packing.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace packcol {

PackingSpec::PackingSpec(std::vector<int> thresholds) : s_(std::move(thresholds)) {
  if (s_.empty()) throw std::invalid_argument("packing spec: empty sequence");
  for (std::size_t i = 0; i < s_.size(); ++i) {
    if (s_[i] < 1) throw std::invalid_argument("packing spec: thresholds must be positive");
    if (i > 0 && s_[i] < s_[i - 1]) {
      throw std::invalid_argument("packing spec: sequence must be non-decreasing");
    }
  }
}

PackingSpec PackingSpec::parse(std::string_view csv) {
  std::vector<int> values;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string_view item = csv.substr(
        start, comma == std::string_view::npos ? csv.size() - start : comma - start);
    if (item.empty()) throw std::invalid_argument("packing spec: empty item");
    int value = 0;
    for (char ch : item) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("packing spec: bad integer");
      value = value * 10 + (ch - '0');
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return PackingSpec(values);
}

std::string PackingSpec::str() const {
  std::string out;
  for (std::size_t i = 0; i < s_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(s_[i]);
  }
  return out;
}

namespace {

// Truncated BFS ball around v: pairs (vertex, distance), distance 1..radius,
// ordered by distance then id.
std::vector<std::pair<int, int>> ball_of(const Graph& g, int v, int radius) {
  std::vector<int> dist(g.order(), -1);
  std::vector<std::pair<int, int>> out;
  std::queue<int> queue;
  dist[v] = 0;
  queue.push(v);
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop();
    if (dist[x] == radius) continue;
    for (int u : g.neighbors(x)) {
      if (dist[u] < 0) {
        dist[u] = dist[x] + 1;
        out.emplace_back(u, dist[u]);
        queue.push(u);
      }
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

void check_assignment(const Graph& g, const PackingSpec& spec,
                      const PackingColoring& c) {
  if (static_cast<int>(c.classes.size()) != g.order()) {
    throw std::invalid_argument("coloring: size does not match graph order");
  }
  for (int cls : c.classes) {
    if (cls < 1 || cls > spec.size()) {
      throw std::invalid_argument("coloring: class out of range (must be total)");
    }
  }
}

}  // namespace

std::vector<Violation> verify_coloring(const Graph& g, const PackingSpec& spec,
                                       const PackingColoring& c) {
  check_assignment(g, spec, c);
  std::vector<Violation> out;
  for (int v = 0; v < g.order(); ++v) {
    int cls = c.classes[v];
    for (auto [u, d] : ball_of(g, v, spec.threshold(cls))) {
      if (u > v && c.classes[u] == cls) out.push_back({cls, v, u, d});
    }
  }
  std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.cls, a.u, a.v) < std::tie(b.cls, b.u, b.v);
  });
  return out;
}

namespace {

struct Searcher {
  const Graph& g;
  const PackingSpec& spec;
  int n;
  int k;
  std::vector<int> order;                             // visit sequence
  std::vector<std::vector<std::pair<int, int>>> ball; // per vertex, truncated
  std::vector<std::uint32_t> allowed;
  std::vector<int> assigned;   // class or 0
  std::vector<int> class_use;  // vertices per class
  long long budget;
  long long decisions = 0;
  bool out_of_budget = false;
  std::vector<int> solution;

  Searcher(const Graph& graph, const PackingSpec& s, long long budget_limit)
      : g(graph), spec(s), n(graph.order()), k(s.size()), budget(budget_limit) {
    ball.reserve(n);
    for (int v = 0; v < n; ++v) ball.push_back(ball_of(graph, v, s.max_threshold()));
    allowed.assign(n, (k >= 32 ? ~0u : (1u << k) - 1));
    assigned.assign(n, 0);
    class_use.assign(k + 1, 0);
  }

  bool class_open(int cls) const {
    // A class may be opened only once every lower-indexed class of the
    // same threshold is in use; this collapses equal-threshold swaps.
    return cls == 1 || spec.threshold(cls - 1) != spec.threshold(cls) ||
           class_use[cls - 1] > 0;
  }

  bool expand(int depth, std::vector<std::pair<int, int>>& trail) {
    if (depth == n) {
      solution.assign(assigned.begin(), assigned.end());
      return true;
    }
    int v = order[depth];
    for (int cls = 1; cls <= k; ++cls) {
      if (!((allowed[v] >> (cls - 1)) & 1u)) continue;
      if (!class_open(cls)) continue;
      if (++decisions > budget) {
        out_of_budget = true;
        return false;
      }
      std::size_t mark = trail.size();
      bool dead = false;
      int radius = spec.threshold(cls);
      for (auto [u, d] : ball[v]) {
        if (d > radius) break;
        if (assigned[u] == 0 && ((allowed[u] >> (cls - 1)) & 1u)) {
          allowed[u] &= ~(1u << (cls - 1));
          trail.emplace_back(u, cls - 1);
          if (allowed[u] == 0) dead = true;
        }
      }
      if (!dead) {
        assigned[v] = cls;
        ++class_use[cls];
        if (expand(depth + 1, trail)) return true;
        --class_use[cls];
        assigned[v] = 0;
        if (out_of_budget) return false;
      }
      while (trail.size() > mark) {
        auto [u, bit] = trail.back();
        trail.pop_back();
        allowed[u] |= 1u << bit;
      }
      if (out_of_budget) return false;
    }
    return false;
  }
};

std::vector<int> base_order(const Graph& g) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  return order;
}

SolveResult run_once(const Graph& g, const PackingSpec& spec,
                     std::vector<int> order, long long budget) {
  Searcher searcher(g, spec, budget);
  searcher.order = std::move(order);
  std::vector<std::pair<int, int>> trail;
  bool found = searcher.expand(0, trail);
  SolveResult result;
  result.decisions = searcher.decisions;
  if (found) {
    result.status = SolveStatus::Satisfiable;
    result.coloring.classes = searcher.solution;
  } else if (searcher.out_of_budget) {
    result.status = SolveStatus::BudgetExceeded;
  } else {
    result.status = SolveStatus::Unsatisfiable;
  }
  return result;
}

}  // namespace

SolveResult solve(const Graph& g, const PackingSpec& spec,
                  const SolveOptions& options) {
  if (g.order() == 0) {
    return {SolveStatus::Satisfiable, PackingColoring{}, 0};
  }
  if (spec.size() > 31) throw std::invalid_argument("solve: more than 31 classes");
  if (!options.seed) {
    return run_once(g, spec, base_order(g), options.decision_budget);
  }
  // Restart mode: shuffle ties within each degree group and retry with
  // geometrically growing slices until the global budget runs out.
  std::mt19937_64 rng(*options.seed);
  long long remaining = options.decision_budget;
  long long slice = 1 << 17;
  long long spent = 0;
  while (remaining > 0) {
    std::vector<int> order = base_order(g);
    for (std::size_t i = 0; i < order.size();) {
      std::size_t j = i;
      while (j < order.size() && g.degree(order[j]) == g.degree(order[i])) ++j;
      std::shuffle(order.begin() + i, order.begin() + j, rng);
      i = j;
    }
    SolveResult result = run_once(g, spec, std::move(order),
                                  std::min(slice, remaining));
    spent += result.decisions;
    if (result.status != SolveStatus::BudgetExceeded) {
      result.decisions = spent;
      return result;
    }
    remaining -= result.decisions;
    slice *= 2;
  }
  return {SolveStatus::BudgetExceeded, PackingColoring{}, spent};
}

ChiPResult chi_p(const Graph& g, int k_max, const SolveOptions& options) {
  if (k_max < 1) throw std::invalid_argument("chi_p: k_max must be >= 1");
  for (int k = 1; k <= k_max; ++k) {
    std::vector<int> thresholds(k);
    std::iota(thresholds.begin(), thresholds.end(), 1);
    SolveResult result = solve(g, PackingSpec(thresholds), options);
    if (result.status == SolveStatus::Satisfiable) {
      return {ChiPResult::Status::Found, k};
    }
    if (result.status == SolveStatus::BudgetExceeded) {
      return {ChiPResult::Status::SolverBudget, k};
    }
  }
  return {ChiPResult::Status::ExceedsKMax, 0};
}

LiftResult lift_subdivision(const Graph& g, const PackingSpec& spec,
                            const PackingColoring& c) {
  if (!verify_coloring(g, spec, c).empty()) {
    throw std::invalid_argument("lift_subdivision: input coloring is not valid");
  }
  Subdivision sub = subdivide(g);
  std::vector<int> lifted(spec.size() + 1);
  lifted[0] = 1;
  for (int i = 0; i < spec.size(); ++i) lifted[i + 1] = 2 * spec.values()[i] + 1;
  // 2s_i+1 >= 3 and the input is non-decreasing, so the sequence is
  // already sorted and the class permutation is the index shift.
  LiftResult result{sub.graph, PackingSpec(lifted), {}, {}, 1, sub.edge_vertex};
  result.class_map.resize(spec.size() + 1, 0);
  for (int i = 1; i <= spec.size(); ++i) result.class_map[i] = i + 1;
  result.coloring.classes.assign(sub.graph.order(), 1);
  for (int v = 0; v < g.order(); ++v) {
    result.coloring.classes[v] = c.classes[v] + 1;
  }
  return result;
}

bool spec_dominates(const PackingSpec& a, const PackingSpec& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i) {
    if (a.values()[i] < b.values()[i]) return false;
  }
  return true;
}

std::string coloring_to_json(const PackingSpec& spec, const PackingColoring& c) {
  nlohmann::ordered_json j;
  j["spec"] = spec.values();
  j["classes"] = c.classes;
  return j.dump();
}

std::pair<PackingSpec, PackingColoring> coloring_from_json(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("spec") || !j.contains("classes")) {
    throw std::invalid_argument("coloring json: missing spec or classes");
  }
  PackingSpec spec(j["spec"].get<std::vector<int>>());
  PackingColoring coloring{j["classes"].get<std::vector<int>>()};
  return {spec, coloring};
}

}  // namespace packcol
