#include <doctest.h>

#include <algorithm>

#include "biconn/errors.hpp"
#include "biconn/oracles.hpp"
#include "biconn/wbd_solver.hpp"
#include "generators.hpp"

using namespace biconn;
using namespace biconn::testing;

TEST_CASE("mu") {
  CHECK(mu(0) == 0);
  CHECK(mu(1) == 67);
  CHECK(mu(2) == 346);
  CHECK(mu(3) == 957);
}

TEST_CASE("normalize freezes critical edges and is idempotent") {
  UndirectedGraph t = theta({1, 2, 2});
  WbdInstance inst;
  inst.graph = t;
  inst.k = 1;
  inst.weight.assign(t.edge_id_bound(), 4.0);
  inst.frozen.assign(t.edge_id_bound(), 0);
  WbdInstance n = normalize(inst);
  CHECK(n.candidates() == std::vector<EdgeId>{0});
  CHECK(n.weight[0] == 4.0);
  for (EdgeId e = 1; e < t.edge_id_bound(); ++e) CHECK(n.weight[e] == 0.0);
  WbdInstance again = normalize(n);
  CHECK(again.frozen == n.frozen);
  CHECK(again.weight == n.weight);

  inst.graph = path_graph(3);
  CHECK_THROWS_AS(normalize(inst), InvalidInput);
}

TEST_CASE("heavy order breaks ties by id") {
  WbdInstance inst = make_instance(complete(4), 2, 0, {3, 5, 5, 1, 5, 2});
  CHECK(heavy_order(inst) == std::vector<EdgeId>{1, 2, 4, 0, 5, 3});
  CHECK(heavy(inst, 2) == std::vector<EdgeId>{1, 2});
  CHECK(heavy(inst, 100).size() == 6);
  CHECK(heavy(inst, -1).empty());
}

TEST_CASE("is_solution") {
  WbdInstance inst = make_instance(complete(4), 2, 2);
  std::vector<EdgeId> opposite = {*inst.graph.find_edge(0, 1), *inst.graph.find_edge(2, 3)};
  std::vector<EdgeId> adjacent = {*inst.graph.find_edge(0, 1), *inst.graph.find_edge(0, 2)};
  CHECK(is_solution(inst, opposite));
  CHECK_FALSE(is_solution(inst, adjacent));
  CHECK_FALSE(is_solution(inst, std::vector<EdgeId>{0}));  // weight 1 < 2
  CHECK_FALSE(is_solution(inst, std::vector<EdgeId>{0, 0}));
  inst.k = 1;
  CHECK_FALSE(is_solution(inst, opposite));
}

TEST_CASE("enumerate_small") {
  WbdInstance inst = make_instance(complete(4), 2, 2);
  auto s = enumerate_small(inst, 6);
  REQUIRE(s);
  CHECK(s->weight == 2.0);
  CHECK(s->edges == std::vector<EdgeId>{*inst.graph.find_edge(0, 1), *inst.graph.find_edge(2, 3)});
  CHECK_THROWS_AS(enumerate_small(inst, 5), InternalInconsistency);

  inst.target = 3;
  CHECK_FALSE(enumerate_small(inst, 6));
  inst.target = 0;
  inst.k = 0;
  auto empty = enumerate_small(inst, 6);
  REQUIRE(empty);
  CHECK(empty->edges.empty());

  // Weighted: the heavier matching wins.
  WbdInstance w = make_instance(complete(4), 2, 0, {1, 4, 1, 1, 4, 1});
  auto best = enumerate_small(w, 6);
  REQUIRE(best);
  CHECK(best->weight == 8.0);
  CHECK(best->edges == std::vector<EdgeId>{1, 4});
}

TEST_CASE("greedy deletion set") {
  Ladder l = ladder(7);
  WbdInstance inst = make_instance(l.graph, 2, 0);
  auto steps = greedy_deletion_set(inst, inst.candidates());
  REQUIRE(steps.size() == 2);
  CHECK(steps[0].edge == l.pivot);
  CHECK(steps[0].newly_critical_heavy == 14);

  WbdInstance c = make_instance(cycle(5), 2, 0);
  CHECK(greedy_deletion_set(c, c.candidates()).empty());
}

TEST_CASE("rich flow orientation") {
  Ladder l = ladder(7);
  auto [a, b] = find_rich_flow(l.graph, l.pivot, l.q.edges);
  CHECK(a.vertices == l.q.vertices);
  CHECK(b.vertices == l.p.vertices);
  auto [c, d] = find_rich_flow(l.graph, l.pivot, l.p.edges);
  CHECK(c.vertices == l.p.vertices);
  CHECK(d.vertices == l.q.vertices);

  UndirectedGraph k5 = complete(5);
  CHECK_THROWS_AS(find_rich_flow(k5, 0, k5.edges()), InternalInconsistency);
}

TEST_CASE("solution from distinct partners") {
  Ladder l = ladder(7);
  PartnerAnalysis pa = build_partner_analysis(l.graph, l.pivot, l.p, l.q, l.graph.edges(), {});
  auto s = solution_from_distinct_partners(pa, 2);
  CHECK(s == std::vector<EdgeId>{std::min(l.p.edges[0], l.p.edges[3]), std::max(l.p.edges[0], l.p.edges[3])});
  CHECK(is_biconnected(l.graph, {.edges = s}));
  CHECK_THROWS_AS(solution_from_distinct_partners(pa, 3), InvalidInput);
}

TEST_CASE("irrelevant edge is the lightest strictly inside the stretch") {
  UndirectedGraph g(10);
  for (int i = 1; i <= 9; ++i) g.add_edge(i, i % 9 + 1);
  for (int i = 1; i <= 9; ++i) g.add_edge(0, i);
  EdgeId pivot = *g.find_edge(1, 2);
  Path rim = path_through(g, {1, 9, 8, 7, 6, 5, 4, 3, 2});
  Path spokes = path_through(g, {1, 0, 2});
  PartnerAnalysis pa = build_partner_analysis(g, pivot, rim, spokes, g.edges(), {});
  std::vector<double> weight(g.edge_id_bound(), 5.0);
  weight[pa.critical[0]] = 0.0;  // endpoints of the stretch never qualify
  weight[pa.critical[7]] = 0.0;
  weight[pa.critical[3]] = 2.0;
  weight[pa.critical[5]] = 2.0;
  EdgeId expect = std::min(pa.critical[3], pa.critical[5]);
  CHECK(irrelevant_edge(pa, {0, 7}, weight, 2) == expect);
  CHECK_THROWS_AS(irrelevant_edge(pa, {0, 6}, weight, 2), InvalidInput);
}

TEST_CASE("solve small examples") {
  auto r = solve(make_instance(complete(4), 2, 2));
  REQUIRE(r.solution);
  CHECK(r.solution->weight == 2.0);
  CHECK(r.stats.enumerations == 1);
  CHECK(r.stats.fallbacks == 0);

  CHECK_FALSE(solve(make_instance(complete(4), 2, 3)).solution);
  CHECK_FALSE(solve(make_instance(cycle(6), 1, 0.5)).solution);
  auto zero = solve(make_instance(cycle(6), 1, 0));
  REQUIRE(zero.solution);
  CHECK(zero.solution->edges.empty());

  // Negative targets behave like zero.
  auto neg = solve(make_instance(cycle(6), 2, -3));
  REQUIRE(neg.solution);
  CHECK(neg.solution->weight == 0.0);

  WbdInstance broken;
  broken.graph = path_graph(4);
  broken.k = 1;
  CHECK_THROWS_AS(solve(broken), InvalidInput);
}

TEST_CASE("lowered threshold exercises branching and irrelevant edges") {
  Rng rng(7);
  SolverStats total;
  for (int round = 0; round < 40; ++round) {
    WbdInstance inst = random_wheel(rng, 9, 2, 0.2);
    SolverConfig config;
    config.lowered = lowered(8);
    int irrelevant = 0;
    config.on_irrelevant_edge = [&](const WbdInstance& before, EdgeId e) {
      ++irrelevant;
      CHECK(oracle_irrelevance(before, e));
    };
    auto knob = solve(inst, config);
    auto exact = oracle_wbd(inst);
    REQUIRE(knob.solution.has_value() == exact.has_value());
    if (exact) CHECK(knob.solution->weight == doctest::Approx(exact->weight));
    CHECK(irrelevant == knob.stats.irrelevant_edges);
    total.merge(knob.stats);

    auto plain = solve(inst);
    REQUIRE(plain.solution.has_value() == exact.has_value());
    if (exact) CHECK(plain.solution->weight == doctest::Approx(exact->weight));
  }
  CHECK(total.irrelevant_edges > 0);
  CHECK(total.max_depth > 0);
}

TEST_CASE("jobs do not change the answer") {
  Rng rng(99);
  for (int round = 0; round < 20; ++round) {
    WbdInstance inst = random_wheel(rng, 9, 2, 0.0);
    SolverConfig one;
    one.lowered = lowered(4);
    SolverConfig four = one;
    four.jobs = 4;
    auto a = solve(inst, one);
    auto b = solve(inst, four);
    REQUIRE(a.solution.has_value() == b.solution.has_value());
    if (a.solution) CHECK(a.solution->edges == b.solution->edges);
    CHECK(a.stats.nodes == b.stats.nodes);
  }
}
