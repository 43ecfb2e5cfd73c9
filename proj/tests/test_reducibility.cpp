#include "packcol/reducibility.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "packcol/packing.hpp"

using namespace packcol;

namespace {

int threshold_of(int cls) { return cls <= 2 ? 1 : 2; }

// Naive scenario oracle: all class vectors over the non-deleted vertices,
// filtered by pairwise admissibility in the fragment minus the deleted
// set, counted up to the two class swaps.
long long oracle_scenario_count(const Configuration& c) {
  int n = c.local.order();
  std::vector<int> visible;
  for (int v = 0; v < n; ++v) {
    if (!c.deleted(v)) visible.push_back(v);
  }
  // distances avoiding deleted vertices
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, 1 << 20));
  for (int s = 0; s < n; ++s) {
    if (c.deleted(s)) continue;
    dist[s][s] = 0;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int u : c.local.neighbors(v)) {
        if (c.deleted(u)) continue;
        if (dist[s][u] > dist[s][v] + 1) {
          dist[s][u] = dist[s][v] + 1;
          queue.push_back(u);
        }
      }
    }
  }
  std::set<std::vector<int>> orbits;
  long long total = 1;
  for (std::size_t i = 0; i < visible.size(); ++i) total *= 4;
  for (long long code = 0; code < total; ++code) {
    long long rest = code;
    std::vector<int> cls(n, 0);
    for (int v : visible) {
      cls[v] = static_cast<int>(rest % 4) + 1;
      rest /= 4;
    }
    bool ok = true;
    for (std::size_t i = 0; i < visible.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < visible.size() && ok; ++j) {
        int u = visible[i], v = visible[j];
        if (cls[u] == cls[v] && dist[u][v] <= threshold_of(cls[u])) ok = false;
      }
    }
    if (!ok) continue;
    // orbit representative: minimum over the four swaps
    std::vector<int> best = cls;
    for (int swap_ones = 0; swap_ones < 2; ++swap_ones) {
      for (int swap_twos = 0; swap_twos < 2; ++swap_twos) {
        std::vector<int> image = cls;
        for (int& x : image) {
          if (swap_ones && (x == 1 || x == 2)) x = 3 - x;
          if (swap_twos && (x == 3 || x == 4)) x = 7 - x;
        }
        best = std::min(best, image);
      }
    }
    orbits.insert(best);
  }
  return static_cast<long long>(orbits.size());
}

Scenario apply_swap(const Scenario& s, bool ones, bool twos) {
  Scenario out = s;
  for (int& x : out.classes) {
    if (ones && (x == 1 || x == 2)) x = 3 - x;
    if (twos && (x == 3 || x == 4)) x = 7 - x;
  }
  return out;
}

Configuration find_config(LemmaId id, const std::string& label_piece) {
  for (const Configuration& c : build_lemma_configs(id)) {
    if (c.label.find(label_piece) != std::string::npos) return c;
  }
  throw std::runtime_error("no variant labeled " + label_piece);
}

}  // namespace

TEST_CASE("the pendant-vertex fragment reduces with two scenarios") {
  auto configs = build_lemma_configs(LemmaId::MinDegree);
  REQUIRE(configs.size() == 1);
  auto scenarios = enumerate_scenarios(configs[0]);
  CHECK(scenarios.size() == 2);
  CheckResult result = check_reducible(configs[0]);
  CHECK(result.reducible);
}

TEST_CASE("scenario enumeration matches the naive oracle on small fragments") {
  for (LemmaId id : {LemmaId::MinDegree, LemmaId::AdjacentTwo, LemmaId::Tool}) {
    for (const Configuration& c : build_lemma_configs(id)) {
      int visible = 0;
      for (int v = 0; v < c.local.order(); ++v) {
        if (!c.deleted(v)) ++visible;
      }
      if (visible > 8) continue;
      auto scenarios = enumerate_scenarios(c);
      CHECK(static_cast<long long>(scenarios.size()) == oracle_scenario_count(c));
      // emitted scenarios are admissible and unique
      std::set<std::vector<int>> seen;
      for (const Scenario& s : scenarios) {
        CHECK(seen.insert(s.classes).second);
      }
      // no two emitted scenarios share an orbit, and orbits cover everything
      for (const Scenario& s : scenarios) {
        for (int ones = 0; ones < 2; ++ones) {
          for (int twos = 0; twos < 2; ++twos) {
            if (!ones && !twos) continue;
            Scenario image = apply_swap(s, ones, twos);
            if (image.classes != s.classes) CHECK(!seen.count(image.classes));
          }
        }
      }
    }
  }
}

TEST_CASE("adjacent 2-vertex variants all reduce") {
  auto configs = build_lemma_configs(LemmaId::AdjacentTwo);
  CHECK(configs.size() >= 4);
  for (const Configuration& c : configs) {
    CheckResult result = check_reducible(c);
    INFO(c.label);
    CHECK(result.reducible);
  }
}

TEST_CASE("the generic two-neighbor fragment reduces") {
  Configuration generic = find_config(LemmaId::TwoNeighbor, "distinct");
  CheckResult result = check_reducible(generic);
  CHECK(result.reducible);
  CHECK(result.settled > 0);
}

TEST_CASE("a deliberately broken fragment yields a counterexample") {
  // deleted 3-vertex whose three neighbors plus two distance-2 vertices
  // are boundary; with all four classes around it nothing extends
  Configuration c;
  c.local = Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
  c.roles = {ConfigRole::Deleted,  ConfigRole::Boundary, ConfigRole::Boundary,
             ConfigRole::Boundary, ConfigRole::Boundary, ConfigRole::Boundary};
  c.host_degree = {3, 3, 3, 3, 3, 3};
  c.lemma = "adjacent_two";  // label only; skips no validation that matters
  c.label = "broken by construction";
  CheckResult result = check_reducible(c);
  CHECK(!result.reducible);
  REQUIRE(result.counterexample.has_value());
  // the reported scenario really admits no repair
  CHECK(!find_repair(c, *result.counterexample));
}

TEST_CASE("tool shapes classify every stuck scenario") {
  auto configs = build_lemma_configs(LemmaId::Tool);
  REQUIRE(configs.size() == 1);
  ToolShapeReport report = check_tool_shapes(configs[0]);
  CHECK(report.scenarios > 0);
  CHECK(report.fully_classified());
  CHECK(report.shape_one > 0);
  CHECK(report.shape_two > 0);
  CHECK(report.scenarios == report.direct_extendable + report.repaired_locally +
                                report.shape_one + report.shape_two);
}

TEST_CASE("tool shape examples from the statement") {
  Configuration tool = build_lemma_configs(LemmaId::Tool)[0];
  // vertex layout: 0 deleted, 1=u, 2=w, 3,4 = outer of u, 5,6 = outer of w
  auto stuck = [&](const Scenario& s) {
    return !find_repair(tool, s, 0).has_value() &&
           !find_repair(tool, s, 2, nullptr).has_value();
  };
  // f(u)=1a, f(w)=1b, outers of u {1b,2b}, outers of w {1a,2a}: shape one
  Scenario shape1{{0, 1, 2, 2, 4, 1, 3}};
  CHECK(stuck(shape1));
  // f(u)=f(w)=2a with both outer pairs {1a,1b}: shape two
  Scenario shape2{{0, 3, 3, 1, 2, 1, 2}};
  CHECK(stuck(shape2));
  // f(u)=1a, f(w)=2a extends directly: v takes the other 1-class
  Scenario easy{{0, 1, 3, 3, 4, 1, 2}};
  CHECK(find_repair(tool, easy, 0).has_value());
}

TEST_CASE("subtree pruning never changes the verdict") {
  // check_reducible settles whole subtrees with one repair; on every
  // fragment small enough to enumerate, its verdict must match the plain
  // scenario-by-scenario search.
  auto brute_verdict = [](const Configuration& c) {
    bool all = true;
    for (const Scenario& s : enumerate_scenarios(c)) {
      if (!find_repair(c, s)) {
        all = false;
        break;
      }
    }
    return all;
  };
  for (LemmaId id : {LemmaId::MinDegree, LemmaId::AdjacentTwo, LemmaId::Tool,
                     LemmaId::TwoNeighbor, LemmaId::SpecialN2}) {
    for (const Configuration& c : build_lemma_configs(id)) {
      int visible = 0;
      for (int v = 0; v < c.local.order(); ++v) {
        if (!c.deleted(v)) ++visible;
      }
      if (visible > 8) continue;
      INFO(c.lemma << "/" << c.variant);
      CHECK(check_reducible(c).reducible == brute_verdict(c));
    }
  }
}

TEST_CASE("pruned and plain verdicts agree on randomized fragments") {
  std::mt19937 rng(31337);
  int tried = 0;
  int reducible_seen = 0, stuck_seen = 0;
  while (tried < 60) {
    int n = 4 + static_cast<int>(rng() % 4);  // 4..7
    // random subcubic local graph
    std::vector<std::pair<int, int>> edges;
    std::vector<int> degree(n, 0);
    std::set<std::pair<int, int>> used;
    for (int t = 0; t < 3 * n; ++t) {
      int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
      if (u == v) continue;
      auto key = std::minmax(u, v);
      if (used.count(key) || degree[key.first] >= 3 || degree[key.second] >= 3) {
        continue;
      }
      used.insert(key);
      edges.push_back(key);
      ++degree[key.first];
      ++degree[key.second];
    }
    Graph local(n, edges);
    if (local.size() == 0) continue;
    Configuration c;
    c.local = local;
    c.roles.assign(n, ConfigRole::Interior);
    c.host_degree.assign(n, 0);
    int deleted = static_cast<int>(rng() % n);
    c.roles[deleted] = ConfigRole::Deleted;
    for (int v = 0; v < n; ++v) {
      if (v != deleted && rng() % 3 == 0) {
        c.roles[v] = ConfigRole::Boundary;
        c.host_degree[v] = 3;
      } else {
        c.host_degree[v] = local.degree(v);
      }
    }
    c.lemma = "adjacent_two";  // exempt from the 2-vertex edge restriction
    c.label = "randomized";
    try {
      validate_configuration(c);
    } catch (const std::exception&) {
      continue;
    }
    ++tried;
    bool brute = true;
    for (const Scenario& s : enumerate_scenarios(c)) {
      if (!find_repair(c, s)) {
        brute = false;
        break;
      }
    }
    CheckResult pruned = check_reducible(c);
    CHECK(pruned.reducible == brute);
    if (brute) {
      ++reducible_seen;
    } else {
      ++stuck_seen;
      REQUIRE(pruned.counterexample.has_value());
      CHECK(!find_repair(c, *pruned.counterexample));
    }
  }
  // the sample hits both outcomes
  CHECK(reducible_seen > 0);
  CHECK(stuck_seen > 0);
}

TEST_CASE("the repair search returns the smallest move first") {
  Configuration pendant = build_lemma_configs(LemmaId::MinDegree)[0];
  // scenario: the neighbor wears the first 1-class
  auto repair = find_repair(pendant, Scenario{{0, 1}});
  REQUIRE(repair.has_value());
  REQUIRE(repair->steps.size() == 1);
  CHECK(repair->steps[0].vertex == 0);
  CHECK(repair->steps[0].cls == 2);  // the other 1-class, tried in order
  auto swapped = find_repair(pendant, Scenario{{0, 3}});
  REQUIRE(swapped.has_value());
  CHECK(swapped->steps[0].cls == 1);
}

TEST_CASE("repairs replay into verified colorings on the fragment as host") {
  // Every fragment doubles as a concrete host: color it minus the deleted
  // set with the solver, feed the restriction back as a scenario, and the
  // repair the checker finds must extend it to a coloring of the whole
  // fragment.
  PackingSpec spec({1, 1, 2, 2});
  for (LemmaId id : {LemmaId::MinDegree, LemmaId::AdjacentTwo, LemmaId::Tool,
                     LemmaId::TwoNeighbor, LemmaId::SpecialN2}) {
    for (const Configuration& c : build_lemma_configs(id)) {
      int n = c.local.order();
      std::vector<int> compact(n, -1);
      std::vector<int> back;
      for (int v = 0; v < n; ++v) {
        if (!c.deleted(v)) {
          compact[v] = static_cast<int>(back.size());
          back.push_back(v);
        }
      }
      std::vector<std::pair<int, int>> rest_edges;
      for (auto [a, b] : c.local.edges()) {
        if (compact[a] >= 0 && compact[b] >= 0) {
          rest_edges.emplace_back(compact[a], compact[b]);
        }
      }
      Graph rest(static_cast<int>(back.size()), rest_edges);
      SolveResult solved = solve(rest, spec);
      REQUIRE(solved.status == SolveStatus::Satisfiable);

      Scenario s;
      s.classes.assign(n, 0);
      for (std::size_t i = 0; i < back.size(); ++i) {
        s.classes[back[i]] = solved.coloring.classes[i];
      }
      auto repair = find_repair(c, s);
      INFO(c.lemma << "/" << c.variant << " " << c.label);
      if (id == LemmaId::Tool) {
        // the tool fragment is not reducible; stuck shapes are expected
        if (!repair) continue;
      }
      REQUIRE(repair.has_value());
      PackingColoring full{s.classes};
      for (const RepairStep& step : repair->steps) {
        full.classes[step.vertex] = step.cls;
      }
      CHECK(verify_coloring(c.local, spec, full).empty());
    }
  }
}

TEST_CASE("check_tool_shapes rejects fragments of the wrong shape") {
  Configuration pendant = build_lemma_configs(LemmaId::MinDegree)[0];
  CHECK_THROWS_AS(check_tool_shapes(pendant), std::invalid_argument);
  Configuration shared = find_config(LemmaId::AdjacentTwo, "coincident");
  CHECK_THROWS_AS(check_tool_shapes(shared), std::invalid_argument);
}

TEST_CASE("every found repair replays into a verified coloring on a host") {
  // a concrete colorable host around the pendant fragment: a path
  // host 0-1-2-3 with the pendant at 0; delete it, color the rest by the
  // solver, then replay the repair
  Graph host = path_graph(4);
  PackingSpec spec({1, 1, 2, 2});

  // the fragment: deleted 0, boundary 1 (cap 3) maps into the host
  Configuration c = build_lemma_configs(LemmaId::MinDegree)[0];

  Graph rest(3, {{0, 1}, {1, 2}});  // host minus vertex 0, relabeled v-1
  SolveResult rest_coloring = solve(rest, spec);
  REQUIRE(rest_coloring.status == SolveStatus::Satisfiable);

  // the scenario seen by the fragment: the color of host vertex 1
  Scenario s{{0, rest_coloring.coloring.classes[0]}};
  auto repair = find_repair(c, s);
  REQUIRE(repair.has_value());

  PackingColoring full;
  full.classes.assign(4, 0);
  for (int v = 1; v < 4; ++v) full.classes[v] = rest_coloring.coloring.classes[v - 1];
  for (const RepairStep& step : repair->steps) {
    // fragment vertex 0 is host vertex 0, fragment vertex 1 is host vertex 1
    full.classes[step.vertex] = step.cls;
  }
  CHECK(verify_coloring(host, spec, full).empty());
}
