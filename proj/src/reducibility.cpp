#include "packcol/reducibility.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace packcol {

namespace {

constexpr int kClasses = 4;  // 1,2 at threshold 1; 3,4 at threshold 2
constexpr int kFar = 1 << 20;

int class_threshold(int cls) { return cls <= 2 ? 1 : 2; }

std::vector<std::vector<int>> pair_distances(const Graph& g,
                                             const std::vector<char>& skip) {
  int n = g.order();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, kFar));
  for (int s = 0; s < n; ++s) {
    if (skip[s]) continue;
    dist[s][s] = 0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int u : g.neighbors(v)) {
        if (skip[u]) continue;
        if (dist[s][u] == kFar) {
          dist[s][u] = dist[s][v] + 1;
          queue.push(u);
        }
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<int> Configuration::deleted_set() const {
  std::vector<int> out;
  for (int v = 0; v < local.order(); ++v) {
    if (roles[v] == ConfigRole::Deleted) out.push_back(v);
  }
  return out;
}

std::vector<int> Configuration::interior_set() const {
  std::vector<int> out;
  for (int v = 0; v < local.order(); ++v) {
    if (roles[v] == ConfigRole::Interior) out.push_back(v);
  }
  return out;
}

void validate_configuration(const Configuration& c) {
  int n = c.local.order();
  if (static_cast<int>(c.roles.size()) != n ||
      static_cast<int>(c.host_degree.size()) != n) {
    throw std::invalid_argument("configuration: field sizes disagree");
  }
  check_graph_invariants(c.local);
  bool has_deleted = false;
  for (int v = 0; v < n; ++v) {
    int deg = c.local.degree(v);
    if (c.host_degree[v] < deg) {
      throw std::invalid_argument("configuration: host degree below local degree");
    }
    if (c.host_degree[v] > 3) {
      throw std::invalid_argument("configuration: host degree above 3");
    }
    if (c.roles[v] != ConfigRole::Boundary && c.host_degree[v] != deg) {
      throw std::invalid_argument(
          "configuration: deleted/interior vertex not fully visible");
    }
    if (c.roles[v] == ConfigRole::Deleted) has_deleted = true;
  }
  if (!has_deleted) throw std::invalid_argument("configuration: nothing deleted");
  // Hosts never contain adjacent 2-vertices once that statement is
  // established; a fragment violating it locally would cover no host.
  for (auto [u, v] : c.local.edges()) {
    bool u_two = c.roles[u] != ConfigRole::Boundary && c.host_degree[u] == 2;
    bool v_two = c.roles[v] != ConfigRole::Boundary && c.host_degree[v] == 2;
    if (u_two && v_two && c.lemma != "min_degree" && c.lemma != "adjacent_two") {
      throw std::invalid_argument("configuration: adjacent visible 2-vertices");
    }
  }
}

namespace {

// Shared machinery for scenario enumeration and repair search.
struct Engine {
  const Configuration& config;
  int n;
  std::vector<char> is_deleted;
  std::vector<int> order;    // non-deleted vertices, close to the deleted first
  std::vector<int> interiors;
  std::vector<int> deleted;
  std::vector<std::vector<int>> dist_full;
  std::vector<std::vector<int>> dist_minus;
  std::vector<char> closed1, closed2;
  std::vector<std::vector<int>> ball1, ball2;       // by full distance
  std::vector<std::pair<int, int>> restored_pairs;  // dist_full==2 < dist_minus
  std::vector<int> cls;  // scenario colors, 0 = unassigned/deleted

  explicit Engine(const Configuration& c) : config(c), n(c.local.order()) {
    is_deleted.assign(n, 0);
    for (int v = 0; v < n; ++v) {
      if (c.roles[v] == ConfigRole::Deleted) {
        is_deleted[v] = 1;
        deleted.push_back(v);
      } else if (c.roles[v] == ConfigRole::Interior) {
        interiors.push_back(v);
      }
    }
    std::vector<char> none(n, 0);
    dist_full = pair_distances(c.local, none);
    dist_minus = pair_distances(c.local, is_deleted);
    closed1.assign(n, 0);
    closed2.assign(n, 0);
    for (int v = 0; v < n; ++v) {
      closed1[v] = c.host_degree[v] == c.local.degree(v);
    }
    for (int v = 0; v < n; ++v) {
      bool ok = closed1[v];
      for (int u : c.local.neighbors(v)) ok = ok && closed1[u];
      closed2[v] = ok;
    }
    ball1.resize(n);
    ball2.resize(n);
    for (int v = 0; v < n; ++v) {
      for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        if (dist_full[v][u] <= 1) ball1[v].push_back(u);
        if (dist_full[v][u] <= 2) ball2[v].push_back(u);
      }
    }
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (is_deleted[p] || is_deleted[q]) continue;
        if (dist_full[p][q] == 2 && dist_minus[p][q] > 2) {
          restored_pairs.emplace_back(p, q);
        }
      }
    }
    // Assignment order: breadth-first from the deleted set.
    std::vector<int> depth(n, -1);
    std::queue<int> queue;
    for (int v : deleted) {
      depth[v] = 0;
      queue.push(v);
    }
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int u : config.local.neighbors(v)) {
        if (depth[u] < 0) {
          depth[u] = depth[v] + 1;
          queue.push(u);
        }
      }
    }
    std::vector<int> all;
    for (int v = 0; v < n; ++v) {
      if (!is_deleted[v]) all.push_back(v);
    }
    std::stable_sort(all.begin(), all.end(), [&](int a, int b) {
      int da = depth[a] < 0 ? kFar : depth[a];
      int db = depth[b] < 0 ? kFar : depth[b];
      if (da != db) return da < db;
      return a < b;
    });
    order = std::move(all);
    cls.assign(n, 0);
  }

  const std::vector<int>& ball(int v, int threshold) const {
    return threshold == 1 ? ball1[v] : ball2[v];
  }

  bool scenario_admissible_step(int v, int c, int assigned_prefix) const {
    int t = class_threshold(c);
    for (int i = 0; i < assigned_prefix; ++i) {
      int u = order[i];
      if (cls[u] == c && dist_minus[u][v] <= t) return false;
    }
    return true;
  }

  // ---- repair search -------------------------------------------------

  struct RepairProbe {
    int max_recolor = -1;
    const std::vector<int>* allowed = nullptr;  // default: interiors
    long long work_cap = 50'000'000;
    bool throw_on_cap = false;
    // Uniform mode: only the vertices marked known carry scenario colors
    // and the repair must stay valid for every admissible completion.
    const std::vector<char>* known = nullptr;
  };

  struct RepairState {
    std::vector<int> targets;     // deleted then recolored, in search order
    std::vector<int> new_cls;     // parallel to targets
    std::vector<char> changed;    // per vertex
    long long work = 0;
  };

  bool known_vertex(const RepairProbe& probe, int v) const {
    if (is_deleted[v]) return false;
    return probe.known == nullptr || (*probe.known)[v];
  }

  // Checks whether recolor set R (by mask over candidate list) can be
  // completed; fills state with the first repair found.
  bool try_colors(const RepairProbe& probe, RepairState& state, std::size_t index) {
    if (++state.work > probe.work_cap) {
      if (probe.throw_on_cap) {
        throw std::runtime_error("repair search budget exhausted on configuration " +
                                 config.lemma + "/" + std::to_string(config.variant) +
                                 " (" + config.label + ")");
      }
      return false;
    }
    if (index == state.targets.size()) return true;
    int x = state.targets[index];
    for (int c = 1; c <= kClasses; ++c) {
      if (!is_deleted[x] && known_vertex(probe, x) && cls[x] == c) continue;
      int t = class_threshold(c);
      if (!(t == 1 ? closed1[x] : closed2[x])) continue;
      bool ok = true;
      for (int u : ball(x, t)) {
        if (state.changed[u]) {
          // compare against the repair color once that vertex is set
          for (std::size_t j = 0; j < index; ++j) {
            if (state.targets[j] == u && state.new_cls[j] == c) ok = false;
          }
        } else if (known_vertex(probe, u)) {
          if (cls[u] == c) ok = false;
        } else {
          ok = false;  // ball member with an unknowable color
        }
        if (!ok) break;
      }
      if (!ok) continue;
      state.new_cls[index] = c;
      if (try_colors(probe, state, index + 1)) return true;
    }
    return false;
  }

  bool subset_feasible(const RepairProbe& probe, const std::vector<char>& changed) const {
    for (auto [p, q] : restored_pairs) {
      if (changed[p] || changed[q]) continue;
      bool p_known = known_vertex(probe, p);
      bool q_known = known_vertex(probe, q);
      if (p_known && q_known) {
        if (cls[p] == cls[q] && class_threshold(cls[p]) == 2) return false;
      } else if (p_known) {
        if (class_threshold(cls[p]) == 2) return false;
      } else if (q_known) {
        if (class_threshold(cls[q]) == 2) return false;
      } else {
        return false;
      }
    }
    return true;
  }

  std::optional<Repair> search_repair(const RepairProbe& probe, int* size_used) {
    const std::vector<int>& pool = probe.allowed ? *probe.allowed : interiors;
    int limit = probe.max_recolor < 0 ? static_cast<int>(pool.size())
                                      : std::min<int>(probe.max_recolor,
                                                      static_cast<int>(pool.size()));
    RepairState state;
    state.changed.assign(n, 0);
    state.work = 0;  // cumulative across all recolor sets
    std::vector<int> chosen;
    std::optional<Repair> found;

    auto attempt = [&]() -> bool {
      state.targets.clear();
      for (int d : deleted) state.targets.push_back(d);
      for (int r : chosen) state.targets.push_back(r);
      state.new_cls.assign(state.targets.size(), 0);
      std::fill(state.changed.begin(), state.changed.end(), 0);
      for (int x : state.targets) state.changed[x] = 1;
      if (!subset_feasible(probe, state.changed)) return false;
      return try_colors(probe, state, 0);
    };

    std::function<bool(std::size_t, int)> combos = [&](std::size_t start,
                                                       int remaining) -> bool {
      if (state.work > probe.work_cap) return false;
      if (remaining == 0) {
        if (attempt()) {
          Repair repair;
          for (std::size_t i = 0; i < state.targets.size(); ++i) {
            repair.steps.push_back({state.targets[i], state.new_cls[i]});
          }
          found = repair;
          if (size_used) *size_used = static_cast<int>(chosen.size());
          return true;
        }
        return false;
      }
      for (std::size_t i = start; i + remaining <= pool.size(); ++i) {
        chosen.push_back(pool[i]);
        if (combos(i + 1, remaining - 1)) return true;
        chosen.pop_back();
      }
      return false;
    };

    for (int size = 0; size <= limit; ++size) {
      if (combos(0, size)) break;
      if (state.work > probe.work_cap) break;
    }
    return found;
  }
};

}  // namespace

std::optional<Repair> find_repair(const Configuration& c, const Scenario& s,
                                  int max_recolor,
                                  const std::vector<int>* allowed_recolor,
                                  long long work_cap) {
  validate_configuration(c);
  Engine engine(c);
  if (static_cast<int>(s.classes.size()) != c.local.order()) {
    throw std::invalid_argument("scenario: size mismatch");
  }
  engine.cls = s.classes;
  Engine::RepairProbe probe;
  probe.max_recolor = max_recolor;
  probe.allowed = allowed_recolor;
  probe.work_cap = work_cap;
  probe.throw_on_cap = true;
  return engine.search_repair(probe, nullptr);
}

namespace {

struct ScenarioDriver {
  Engine engine;
  long long cap;
  long long visited_leaves = 0;

  ScenarioDriver(const Configuration& c, long long cap_limit)
      : engine(c), cap(cap_limit) {}

  // DFS with the first-use symmetry rule: class 2 opens only after class 1
  // appears earlier in the order, likewise 4 after 3.
  template <typename Prune, typename Leaf>
  bool walk(std::size_t depth, int used_mask, const Prune& prune, const Leaf& leaf) {
    if (prune(depth)) return true;
    if (depth == engine.order.size()) {
      ++visited_leaves;
      return leaf();
    }
    int v = engine.order[depth];
    for (int c = 1; c <= kClasses; ++c) {
      if (c == 2 && !(used_mask & 1)) continue;
      if (c == 4 && !(used_mask & 4)) continue;
      if (!engine.scenario_admissible_step(v, c, static_cast<int>(depth))) continue;
      engine.cls[v] = c;
      bool go_on = walk(depth + 1, used_mask | (1 << (c - 1)), prune, leaf);
      engine.cls[v] = 0;
      if (!go_on) return false;
    }
    return true;
  }
};

}  // namespace

void for_each_scenario(const Configuration& c,
                       const std::function<void(const Scenario&)>& fn,
                       long long cap) {
  validate_configuration(c);
  ScenarioDriver driver(c, cap);
  auto prune = [](std::size_t) { return false; };
  auto leaf = [&]() {
    if (driver.visited_leaves > cap) {
      throw std::runtime_error("scenario cap exceeded on configuration " +
                               c.lemma + "/" + std::to_string(c.variant));
    }
    fn(Scenario{driver.engine.cls});
    return true;
  };
  driver.walk(0, 0, prune, leaf);
}

std::vector<Scenario> enumerate_scenarios(const Configuration& c, long long cap) {
  std::vector<Scenario> out;
  for_each_scenario(c, [&](const Scenario& s) { out.push_back(s); }, cap);
  return out;
}

CheckResult check_reducible(const Configuration& c, const CheckOptions& options) {
  validate_configuration(c);
  auto start = std::chrono::steady_clock::now();
  CheckResult result;
  ScenarioDriver driver(c, options.scenario_cap);
  Engine& engine = driver.engine;

  std::vector<char> known(engine.n, 0);
  long long nodes = 0;

  auto prune = [&](std::size_t depth) -> bool {
    if (depth == engine.order.size()) return false;  // leaves handle themselves
    if (++nodes > options.scenario_cap) {
      throw std::runtime_error("scenario cap exceeded on configuration " +
                               c.lemma + "/" + std::to_string(c.variant));
    }
    std::fill(known.begin(), known.end(), 0);
    for (std::size_t i = 0; i < depth; ++i) known[engine.order[i]] = 1;
    Engine::RepairProbe probe;
    probe.max_recolor = options.max_recolor < 0 ? 4 : std::min(options.max_recolor, 4);
    probe.work_cap = 100'000;
    probe.known = &known;
    if (engine.search_repair(probe, nullptr)) {
      ++result.pruned;
      return true;
    }
    return false;
  };

  auto leaf = [&]() -> bool {
    ++result.leaves;
    Engine::RepairProbe probe;
    probe.max_recolor = options.max_recolor;
    probe.work_cap = options.leaf_work_cap;
    probe.throw_on_cap = true;
    int size_used = 0;
    auto repair = engine.search_repair(probe, &size_used);
    if (!repair) {
      result.counterexample = Scenario{engine.cls};
      return false;
    }
    result.max_repair_size = std::max(result.max_repair_size, size_used);
    return true;
  };

  bool completed = driver.walk(0, 0, prune, leaf);
  result.reducible = completed && !result.counterexample;
  result.settled = result.leaves + result.pruned;
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

ToolShapeReport check_tool_shapes(const Configuration& c) {
  validate_configuration(c);
  auto deleted = c.deleted_set();
  if (deleted.size() != 1 || c.local.degree(deleted[0]) != 2) {
    throw std::invalid_argument("check_tool_shapes: wrong configuration shape");
  }
  int v = deleted[0];
  auto vn = c.local.neighbors(v);
  int u = vn[0], w = vn[1];
  auto outer = [&](int x) {
    std::vector<int> out;
    for (int y : c.local.neighbors(x)) {
      if (y != v) out.push_back(y);
    }
    return out;
  };
  auto us = outer(u), ws = outer(w);
  bool shape_ok = c.roles[u] == ConfigRole::Interior &&
                  c.roles[w] == ConfigRole::Interior && c.local.degree(u) == 3 &&
                  c.local.degree(w) == 3 && !c.local.adjacent(u, w) &&
                  us.size() == 2 && ws.size() == 2;
  for (int x : us) shape_ok = shape_ok && !c.local.adjacent(x, ws[0]) &&
                              !c.local.adjacent(x, ws[1]) && x != ws[0] && x != ws[1];
  if (!shape_ok) {
    throw std::invalid_argument("check_tool_shapes: wrong configuration shape");
  }

  std::vector<int> ring = ring_at(c.local, v, 2);
  std::vector<int> local_recolor{u, w};
  std::sort(local_recolor.begin(), local_recolor.end());

  ToolShapeReport report;
  for_each_scenario(c, [&](const Scenario& s) {
    ++report.scenarios;
    if (find_repair(c, s, 0)) {
      ++report.direct_extendable;
      return;
    }
    if (find_repair(c, s, 2, &local_recolor)) {
      ++report.repaired_locally;
      return;
    }
    auto cls = [&](int x) { return s.classes[x]; };
    auto has = [&](std::initializer_list<int> xs, int target) {
      for (int x : xs) {
        if (cls(x) == target) return true;
      }
      return false;
    };
    bool ring_both_twos = [&] {
      bool a = false, b = false;
      for (int x : ring) {
        a = a || cls(x) == 3;
        b = b || cls(x) == 4;
      }
      return a && b;
    }();
    bool shape1 = ((cls(u) == 1 && cls(w) == 2) || (cls(u) == 2 && cls(w) == 1)) &&
                  has({u, us[0], us[1]}, 1) && has({u, us[0], us[1]}, 2) &&
                  has({w, ws[0], ws[1]}, 1) && has({w, ws[0], ws[1]}, 2) &&
                  ring_both_twos;
    bool shape2 = cls(u) == cls(w) && class_threshold(cls(u)) == 2 &&
                  ((cls(us[0]) == 1 && cls(us[1]) == 2) ||
                   (cls(us[0]) == 2 && cls(us[1]) == 1)) &&
                  ((cls(ws[0]) == 1 && cls(ws[1]) == 2) ||
                   (cls(ws[0]) == 2 && cls(ws[1]) == 1));
    if (shape1) {
      ++report.shape_one;
    } else if (shape2) {
      ++report.shape_two;
    } else {
      report.unmatched.push_back(s);
    }
  });
  return report;
}

// ---------------------------------------------------------------------------
// Lemma library
// ---------------------------------------------------------------------------

namespace {

struct Pat {
  std::vector<ConfigRole> roles;
  std::vector<int> hd;
  std::vector<std::pair<int, int>> edges;

  int add(ConfigRole role, int host_degree) {
    roles.push_back(role);
    hd.push_back(host_degree);
    return static_cast<int>(roles.size()) - 1;
  }
  void link(int a, int b) { edges.emplace_back(a, b); }

  Configuration finish(const std::string& lemma, const std::string& label) const {
    Configuration c;
    c.local = Graph(static_cast<int>(roles.size()), edges);
    c.roles = roles;
    c.host_degree = hd;
    c.lemma = lemma;
    c.label = label;
    validate_configuration(c);
    return c;
  }
};

// Attaches the witness structure certifying that v has a 2-neighbor: the
// 2-neighbor w_a with its far side x_a fully visible, and the 3-neighbor
// w_b with visible color sources. Consumes two free slots of v.
void attach_witness_deep(Pat& pat, int v) {
  int wa = pat.add(ConfigRole::Interior, 2);
  int wb = pat.add(ConfigRole::Interior, 3);
  pat.link(v, wa);
  pat.link(v, wb);
  int xa = pat.add(ConfigRole::Interior, 3);
  pat.link(wa, xa);
  for (int i = 0; i < 2; ++i) pat.link(xa, pat.add(ConfigRole::Boundary, 3));
  for (int i = 0; i < 2; ++i) pat.link(wb, pat.add(ConfigRole::Boundary, 3));
}

// The 2-neighbor witness alone, far side visible (one free slot of v).
int attach_two_neighbor_deep(Pat& pat, int v) {
  int wa = pat.add(ConfigRole::Interior, 2);
  pat.link(v, wa);
  int xa = pat.add(ConfigRole::Interior, 3);
  pat.link(wa, xa);
  for (int i = 0; i < 2; ++i) pat.link(xa, pat.add(ConfigRole::Boundary, 3));
  return wa;
}

void attach_boundary_children(Pat& pat, int v, int count) {
  for (int i = 0; i < count; ++i) pat.link(v, pat.add(ConfigRole::Boundary, 3));
}

std::vector<Configuration> build_min_degree() {
  Pat pat;
  int v = pat.add(ConfigRole::Deleted, 1);
  int u = pat.add(ConfigRole::Boundary, 3);
  pat.link(v, u);
  return {pat.finish("min_degree", "pendant vertex")};
}

std::vector<Configuration> build_adjacent_two() {
  std::vector<Configuration> out;
  // Distinct other-neighbors; the side we may recolor is fully visible.
  for (int du : {3, 2}) {
    for (bool chord : {false, true}) {  // edge from that side to the far side
      Pat pat;
      int u = pat.add(ConfigRole::Deleted, 2);
      int v = pat.add(ConfigRole::Deleted, 2);
      int up = pat.add(ConfigRole::Interior, du);
      int vp = pat.add(ConfigRole::Boundary, 3);
      pat.link(u, v);
      pat.link(u, up);
      pat.link(v, vp);
      int free = du - 1;
      if (chord) {
        pat.link(up, vp);
        --free;
      }
      attach_boundary_children(pat, up, free);
      out.push_back(pat.finish("adjacent_two",
                               std::string("distinct far vertices, visible side degree ") +
                                   std::to_string(du) + (chord ? ", sides adjacent" : "")));
    }
  }
  // Coincident far vertex.
  for (int d : {2, 3}) {
    Pat pat;
    int u = pat.add(ConfigRole::Deleted, 2);
    int v = pat.add(ConfigRole::Deleted, 2);
    int shared = pat.add(ConfigRole::Interior, d);
    pat.link(u, v);
    pat.link(u, shared);
    pat.link(v, shared);
    attach_boundary_children(pat, shared, d - 2);
    out.push_back(pat.finish("adjacent_two", "coincident far vertex, degree " +
                                                 std::to_string(d)));
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].variant = static_cast<int>(i);
  return out;
}

std::vector<Configuration> build_tool() {
  Pat pat;
  int v = pat.add(ConfigRole::Deleted, 2);
  int u = pat.add(ConfigRole::Interior, 3);
  int w = pat.add(ConfigRole::Interior, 3);
  pat.link(v, u);
  pat.link(v, w);
  attach_boundary_children(pat, u, 2);
  attach_boundary_children(pat, w, 2);
  return {pat.finish("tool", "two-vertex between visible 3-vertices")};
}

std::vector<Configuration> build_two_neighbor() {
  std::vector<Configuration> out;
  // Identification patterns over the three far vertices (v1 at the deleted
  // 2-vertex, v2 across the middle, v3 at the second 2-vertex), plus the
  // optional edges among them; remaining slots become boundary stubs.
  enum Pattern { Distinct, V1V2, V1V3, V2V3, AllOne };
  for (Pattern pattern : {Distinct, V1V2, V1V3, V2V3, AllOne}) {
    std::vector<int> v2_degrees{3};
    if (pattern == Distinct || pattern == V1V3) v2_degrees = {3, 2};
    for (int dv2 : v2_degrees) {
      int edge_options = pattern == Distinct ? 8 : (pattern == AllOne ? 1 : 2);
      for (int mask = 0; mask < edge_options; ++mask) {
        Pat pat;
        int u1 = pat.add(ConfigRole::Deleted, 2);
        int u2 = pat.add(ConfigRole::Interior, 3);
        int u3 = pat.add(ConfigRole::Interior, 2);
        pat.link(u1, u2);
        pat.link(u2, u3);
        int v1 = -1, v2 = -1, v3 = -1;
        switch (pattern) {
          case Distinct:
            v1 = pat.add(ConfigRole::Interior, 3);
            v2 = pat.add(ConfigRole::Interior, dv2);
            v3 = pat.add(ConfigRole::Interior, 3);
            break;
          case V1V2:
            v1 = v2 = pat.add(ConfigRole::Interior, 3);
            v3 = pat.add(ConfigRole::Interior, 3);
            break;
          case V1V3:
            v1 = v3 = pat.add(ConfigRole::Interior, 3);
            v2 = pat.add(ConfigRole::Interior, dv2);
            break;
          case V2V3:
            v2 = v3 = pat.add(ConfigRole::Interior, 3);
            v1 = pat.add(ConfigRole::Interior, 3);
            break;
          case AllOne:
            v1 = v2 = v3 = pat.add(ConfigRole::Interior, 3);
            break;
        }
        pat.link(u1, v1);
        pat.link(u2, v2);
        pat.link(u3, v3);
        std::vector<int> extra(pat.roles.size(), 0);
        bool ok = true;
        auto add_edge = [&](int a, int b) {
          if (a == b) {
            ok = false;
            return;
          }
          pat.link(a, b);
          ++extra[a];
          ++extra[b];
        };
        if (pattern == Distinct) {
          if (mask & 1) add_edge(v1, v2);
          if (mask & 2) add_edge(v1, v3);
          if (mask & 4) add_edge(v2, v3);
        } else if (pattern != AllOne && mask == 1) {
          if (pattern == V1V2) add_edge(v1, v3);
          if (pattern == V1V3) add_edge(v1, v2);
          if (pattern == V2V3) add_edge(v1, v2);
        }
        if (!ok) continue;
        // fill remaining slots with boundary stubs; reject over-filled
        std::map<int, int> base_degree;
        for (auto [a, b] : pat.edges) {
          ++base_degree[a];
          ++base_degree[b];
        }
        for (int x : {v1, v2, v3}) {
          if (base_degree[x] > pat.hd[x]) ok = false;
        }
        if (!ok) continue;
        for (int x : std::set<int>{v1, v2, v3}) {
          attach_boundary_children(pat, x, pat.hd[x] - base_degree[x]);
        }
        std::string label = "far vertices ";
        label += pattern == Distinct  ? "distinct"
                 : pattern == V1V2   ? "shared at the deleted side"
                 : pattern == V1V3   ? "shared across the 2-vertices"
                 : pattern == V2V3   ? "shared at the far side"
                                     : "all one vertex";
        if (dv2 == 2) label += ", middle far vertex of degree 2";
        if (mask && pattern == Distinct) label += ", chords " + std::to_string(mask);
        if (mask && pattern != Distinct) label += ", chord";
        out.push_back(pat.finish("two_neighbor", label));
      }
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].variant = static_cast<int>(i);
  return out;
}

std::vector<Configuration> build_special_n2() {
  std::vector<Configuration> out;
  auto core = [](Pat& pat, int& u, int& u1, int& u2) {
    u = pat.add(ConfigRole::Deleted, 2);
    u1 = pat.add(ConfigRole::Interior, 3);
    u2 = pat.add(ConfigRole::Interior, 3);
    pat.link(u, u1);
    pat.link(u, u2);
  };

  {  // generic: two non-special certificates on one side, far side visible
    Pat pat;
    int u, u1, u2;
    core(pat, u, u1, u2);
    int v1 = pat.add(ConfigRole::Interior, 3);
    int v2 = pat.add(ConfigRole::Interior, 3);
    pat.link(u1, v1);
    pat.link(u1, v2);
    attach_boundary_children(pat, u2, 2);
    attach_witness_deep(pat, v1);
    attach_witness_deep(pat, v2);
    out.push_back(pat.finish("special_n2", "generic"));
  }
  {  // the two certified vertices are adjacent
    Pat pat;
    int u, u1, u2;
    core(pat, u, u1, u2);
    int v1 = pat.add(ConfigRole::Interior, 3);
    int v2 = pat.add(ConfigRole::Interior, 3);
    pat.link(u1, v1);
    pat.link(u1, v2);
    pat.link(v1, v2);
    attach_boundary_children(pat, u2, 2);
    attach_two_neighbor_deep(pat, v1);
    attach_two_neighbor_deep(pat, v2);
    out.push_back(pat.finish("special_n2", "certified pair adjacent"));
  }
  {  // the two certificates share their 2-neighbor
    Pat pat;
    int u, u1, u2;
    core(pat, u, u1, u2);
    int v1 = pat.add(ConfigRole::Interior, 3);
    int v2 = pat.add(ConfigRole::Interior, 3);
    pat.link(u1, v1);
    pat.link(u1, v2);
    attach_boundary_children(pat, u2, 2);
    int w = pat.add(ConfigRole::Interior, 2);
    pat.link(v1, w);
    pat.link(v2, w);
    for (int x : {v1, v2}) {
      int wb = pat.add(ConfigRole::Interior, 3);
      pat.link(x, wb);
      attach_boundary_children(pat, wb, 2);
    }
    out.push_back(pat.finish("special_n2", "shared 2-neighbor"));
  }
  {  // one distance-2 vertex shared by both sides
    Pat pat;
    int u, u1, u2;
    core(pat, u, u1, u2);
    int a = pat.add(ConfigRole::Interior, 3);
    pat.link(u1, a);
    pat.link(u2, a);
    attach_boundary_children(pat, a, 1);
    int v2 = pat.add(ConfigRole::Interior, 3);
    pat.link(u1, v2);
    attach_boundary_children(pat, v2, 2);
    attach_boundary_children(pat, u2, 1);
    out.push_back(pat.finish("special_n2", "one far vertex shared"));
  }
  {  // both distance-2 vertices shared by both sides
    Pat pat;
    int u, u1, u2;
    core(pat, u, u1, u2);
    int a = pat.add(ConfigRole::Interior, 3);
    int b = pat.add(ConfigRole::Interior, 3);
    for (int x : {a, b}) {
      pat.link(u1, x);
      pat.link(u2, x);
      attach_boundary_children(pat, x, 1);
    }
    out.push_back(pat.finish("special_n2", "both far vertices shared"));
  }
  {  // the two visible 3-vertices adjacent; the adjacency blocks the
     // switch of their 1-classes, so the certificate branch needs its
     // full depth for the repairs
    Pat pat;
    int u, u1, u2;
    core(pat, u, u1, u2);
    pat.link(u1, u2);
    int v2 = pat.add(ConfigRole::Interior, 3);
    pat.link(u1, v2);
    attach_witness_deep(pat, v2);
    attach_boundary_children(pat, u2, 1);
    out.push_back(pat.finish("special_n2", "visible 3-vertices adjacent"));
  }
  {  // certificates share their 3-neighbor
    Pat pat;
    int u, u1, u2;
    core(pat, u, u1, u2);
    int v1 = pat.add(ConfigRole::Interior, 3);
    int v2 = pat.add(ConfigRole::Interior, 3);
    pat.link(u1, v1);
    pat.link(u1, v2);
    attach_boundary_children(pat, u2, 2);
    attach_two_neighbor_deep(pat, v1);
    attach_two_neighbor_deep(pat, v2);
    int c = pat.add(ConfigRole::Interior, 3);
    pat.link(v1, c);
    pat.link(v2, c);
    attach_boundary_children(pat, c, 1);
    out.push_back(pat.finish("special_n2", "shared 3-neighbor"));
  }
  {  // far sides of the two 2-neighbors coincide
    Pat pat;
    int u, u1, u2;
    core(pat, u, u1, u2);
    int v1 = pat.add(ConfigRole::Interior, 3);
    int v2 = pat.add(ConfigRole::Interior, 3);
    pat.link(u1, v1);
    pat.link(u1, v2);
    attach_boundary_children(pat, u2, 2);
    int wa1 = pat.add(ConfigRole::Interior, 2);
    int wa2 = pat.add(ConfigRole::Interior, 2);
    pat.link(v1, wa1);
    pat.link(v2, wa2);
    int d = pat.add(ConfigRole::Interior, 3);
    pat.link(wa1, d);
    pat.link(wa2, d);
    attach_boundary_children(pat, d, 1);
    for (int x : {v1, v2}) {
      int wb = pat.add(ConfigRole::Interior, 3);
      pat.link(x, wb);
      attach_boundary_children(pat, wb, 2);
    }
    out.push_back(pat.finish("special_n2", "shared far 3-vertex behind both 2-neighbors"));
  }
  {  // one certificate's far vertex is the other certificate's 3-neighbor
    Pat pat;
    int u, u1, u2;
    core(pat, u, u1, u2);
    int v1 = pat.add(ConfigRole::Interior, 3);
    int v2 = pat.add(ConfigRole::Interior, 3);
    pat.link(u1, v1);
    pat.link(u1, v2);
    attach_boundary_children(pat, u2, 2);
    int w1 = pat.add(ConfigRole::Interior, 2);
    pat.link(v1, w1);
    int e = pat.add(ConfigRole::Interior, 3);
    pat.link(w1, e);
    pat.link(v2, e);
    attach_boundary_children(pat, e, 1);
    int w2 = pat.add(ConfigRole::Interior, 3);
    pat.link(v1, w2);
    attach_boundary_children(pat, w2, 2);
    attach_two_neighbor_deep(pat, v2);
    out.push_back(pat.finish("special_n2", "far vertex equal to the other 3-neighbor"));
  }
  {  // far vertex of a 2-neighbor adjacent to the same side's 3-neighbor
    Pat pat;
    int u, u1, u2;
    core(pat, u, u1, u2);
    int v1 = pat.add(ConfigRole::Interior, 3);
    int v2 = pat.add(ConfigRole::Interior, 3);
    pat.link(u1, v1);
    pat.link(u1, v2);
    attach_boundary_children(pat, u2, 2);
    int w1 = pat.add(ConfigRole::Interior, 2);
    int w2 = pat.add(ConfigRole::Interior, 3);
    pat.link(v1, w1);
    pat.link(v1, w2);
    int x1 = pat.add(ConfigRole::Interior, 3);
    pat.link(w1, x1);
    pat.link(w2, x1);
    attach_boundary_children(pat, x1, 1);
    attach_boundary_children(pat, w2, 1);
    attach_witness_deep(pat, v2);
    out.push_back(pat.finish("special_n2", "far vertex adjacent to same side 3-neighbor"));
  }
  {  // certificate's 3-neighbor lies on the other side of the deleted vertex
    Pat pat;
    int u, u1, u2;
    core(pat, u, u1, u2);
    int v1 = pat.add(ConfigRole::Interior, 3);
    int v2 = pat.add(ConfigRole::Interior, 3);
    pat.link(u1, v1);
    pat.link(u1, v2);
    int g = pat.add(ConfigRole::Interior, 3);
    pat.link(v1, g);
    pat.link(u2, g);
    attach_boundary_children(pat, g, 1);
    attach_boundary_children(pat, u2, 1);
    attach_two_neighbor_deep(pat, v1);
    attach_witness_deep(pat, v2);
    out.push_back(pat.finish("special_n2", "3-neighbor shared with the far side"));
  }
  {  // far vertex behind a 2-neighbor adjacent to the other side
    Pat pat;
    int u, u1, u2;
    core(pat, u, u1, u2);
    int v1 = pat.add(ConfigRole::Interior, 3);
    int v2 = pat.add(ConfigRole::Interior, 3);
    pat.link(u1, v1);
    pat.link(u1, v2);
    int w1 = pat.add(ConfigRole::Interior, 2);
    pat.link(v1, w1);
    int h = pat.add(ConfigRole::Interior, 3);
    pat.link(w1, h);
    pat.link(u2, h);
    attach_boundary_children(pat, h, 1);
    attach_boundary_children(pat, u2, 1);
    int w2 = pat.add(ConfigRole::Interior, 3);
    pat.link(v1, w2);
    attach_boundary_children(pat, w2, 2);
    attach_witness_deep(pat, v2);
    out.push_back(pat.finish("special_n2", "far vertex behind 2-neighbor on the other side"));
  }
  {  // the two far 3-vertices behind the 2-neighbors adjacent
    Pat pat;
    int u, u1, u2;
    core(pat, u, u1, u2);
    int v1 = pat.add(ConfigRole::Interior, 3);
    int v2 = pat.add(ConfigRole::Interior, 3);
    pat.link(u1, v1);
    pat.link(u1, v2);
    attach_boundary_children(pat, u2, 2);
    int w1 = pat.add(ConfigRole::Interior, 2);
    int w3 = pat.add(ConfigRole::Interior, 2);
    pat.link(v1, w1);
    pat.link(v2, w3);
    int x1 = pat.add(ConfigRole::Interior, 3);
    int x4 = pat.add(ConfigRole::Interior, 3);
    pat.link(w1, x1);
    pat.link(w3, x4);
    pat.link(x1, x4);
    attach_boundary_children(pat, x1, 1);
    attach_boundary_children(pat, x4, 1);
    for (int x : {v1, v2}) {
      int wb = pat.add(ConfigRole::Interior, 3);
      pat.link(x, wb);
      attach_boundary_children(pat, wb, 2);
    }
    out.push_back(pat.finish("special_n2", "far 3-vertices behind the 2-neighbors adjacent"));
  }
  {  // adjacent certificates sharing their 2-neighbor
    Pat pat;
    int u, u1, u2;
    core(pat, u, u1, u2);
    int v1 = pat.add(ConfigRole::Interior, 3);
    int v2 = pat.add(ConfigRole::Interior, 3);
    pat.link(u1, v1);
    pat.link(u1, v2);
    pat.link(v1, v2);
    attach_boundary_children(pat, u2, 2);
    int w = pat.add(ConfigRole::Interior, 2);
    pat.link(v1, w);
    pat.link(v2, w);
    out.push_back(pat.finish("special_n2", "adjacent pair with shared 2-neighbor"));
  }
  {  // shared 2-neighbor and shared 3-neighbor
    Pat pat;
    int u, u1, u2;
    core(pat, u, u1, u2);
    int v1 = pat.add(ConfigRole::Interior, 3);
    int v2 = pat.add(ConfigRole::Interior, 3);
    pat.link(u1, v1);
    pat.link(u1, v2);
    attach_boundary_children(pat, u2, 2);
    int w = pat.add(ConfigRole::Interior, 2);
    pat.link(v1, w);
    pat.link(v2, w);
    int cshared = pat.add(ConfigRole::Interior, 3);
    pat.link(v1, cshared);
    pat.link(v2, cshared);
    attach_boundary_children(pat, cshared, 1);
    out.push_back(pat.finish("special_n2", "shared 2-neighbor and shared 3-neighbor"));
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].variant = static_cast<int>(i);
  return out;
}

// Role- and degree-aware isomorphism key for deduplicating variants.
std::string config_key(const Configuration& c) {
  int n = c.local.order();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) {
    color[v] = static_cast<int>(c.roles[v]) * 16 + c.host_degree[v];
  }
  // initial cells by color value
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return color[a] < color[b]; });
  std::vector<std::vector<int>> cells;
  for (int v : order) {
    if (cells.empty() || color[cells.back().front()] != color[v]) cells.push_back({});
    cells.back().push_back(v);
  }
  std::vector<int> cell_of(n, 0);
  for (;;) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (int v : cells[i]) cell_of[v] = static_cast<int>(i);
    }
    std::vector<std::vector<int>> next;
    for (const auto& cell : cells) {
      std::vector<std::pair<std::vector<int>, int>> tagged;
      for (int v : cell) {
        std::vector<int> sig(cells.size(), 0);
        for (int u : c.local.neighbors(v)) ++sig[cell_of[u]];
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
  std::vector<int> position_cell;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      position_cell.push_back(static_cast<int>(i));
    }
  }
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> best(n, kMax);
  std::vector<int> perm(n, -1);
  std::vector<char> used(n, 0);
  std::function<void(int)> descend = [&](int pos) {
    if (pos == n) return;
    for (int v : cells[position_cell[pos]]) {
      if (used[v]) continue;
      std::uint64_t bits = 0;
      for (int p = 0; p < pos; ++p) {
        bits = (bits << 1) | (c.local.adjacent(perm[p], v) ? 1u : 0u);
      }
      if (bits > best[pos]) continue;
      if (bits < best[pos]) {
        best[pos] = bits;
        std::fill(best.begin() + pos + 1, best.end(), kMax);
      }
      used[v] = 1;
      perm[pos] = v;
      descend(pos + 1);
      used[v] = 0;
    }
  };
  descend(0);
  std::string key = std::to_string(n);
  for (int pos = 0; pos < n; ++pos) {
    key += "," + std::to_string(color[cells[position_cell[pos]].front()]);
  }
  for (int pos = 0; pos < n; ++pos) key += ":" + std::to_string(best[pos]);
  return key;
}

std::vector<Configuration> dedup(std::vector<Configuration> configs) {
  std::set<std::string> seen;
  std::vector<Configuration> out;
  for (auto& c : configs) {
    if (seen.insert(config_key(c)).second) out.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].variant = static_cast<int>(i);
  return out;
}

}  // namespace

LemmaId lemma_from_name(std::string_view name) {
  if (name == "min_degree") return LemmaId::MinDegree;
  if (name == "adjacent_two") return LemmaId::AdjacentTwo;
  if (name == "tool") return LemmaId::Tool;
  if (name == "two_neighbor") return LemmaId::TwoNeighbor;
  if (name == "special_n2") return LemmaId::SpecialN2;
  throw std::invalid_argument("unknown lemma name: " + std::string(name));
}

std::string lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::MinDegree: return "min_degree";
    case LemmaId::AdjacentTwo: return "adjacent_two";
    case LemmaId::Tool: return "tool";
    case LemmaId::TwoNeighbor: return "two_neighbor";
    case LemmaId::SpecialN2: return "special_n2";
  }
  throw std::logic_error("lemma_name: bad id");
}

std::vector<Configuration> build_lemma_configs(LemmaId id) {
  switch (id) {
    case LemmaId::MinDegree: return dedup(build_min_degree());
    case LemmaId::AdjacentTwo: return dedup(build_adjacent_two());
    case LemmaId::Tool: return dedup(build_tool());
    case LemmaId::TwoNeighbor: return dedup(build_two_neighbor());
    case LemmaId::SpecialN2: return dedup(build_special_n2());
  }
  throw std::logic_error("build_lemma_configs: bad id");
}

}  // namespace packcol
