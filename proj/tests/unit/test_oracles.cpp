#include <doctest.h>

#include "biconn/errors.hpp"
#include "biconn/oracles.hpp"
#include "generators.hpp"

using namespace biconn;
using namespace biconn::testing;

TEST_CASE("wbd oracle") {
  auto best = oracle_wbd(make_instance(complete(4), 2, 2));
  REQUIRE(best);
  CHECK(best->weight == 2.0);
  CHECK(best->edges == std::vector<EdgeId>{0, 5});
  CHECK_FALSE(oracle_wbd(make_instance(complete(4), 2, 2.5)));
  CHECK_FALSE(oracle_wbd(make_instance(cycle(5), 1, 1)));
  CHECK(oracle_wbd(make_instance(cycle(5), 1, 0)));

  CHECK_THROWS_AS(oracle_wbd(make_instance(complete(11), 1, 0)), BudgetExceeded);
  CHECK_THROWS_AS(oracle_wbd(make_instance(complete(7), 1, 0)), BudgetExceeded);  // 21 edges
  CHECK_THROWS_AS(oracle_wbd(make_instance(complete(4), 4, 0)), BudgetExceeded);
  OracleBudget tiny;
  tiny.max_candidates = 5;
  CHECK_THROWS_AS(oracle_wbd(make_instance(complete(4), 1, 0), tiny), BudgetExceeded);
}

TEST_CASE("irrelevance oracle") {
  WbdInstance k4 = make_instance(complete(4), 1, 1);
  for (EdgeId e : k4.graph.edges()) CHECK(oracle_irrelevance(k4, e));
  WbdInstance one = make_instance(theta({1, 2, 2}), 1, 1);
  CHECK_FALSE(oracle_irrelevance(one, 0));
  WbdInstance none = make_instance(cycle(4), 1, 1);
  CHECK(oracle_irrelevance(none, 0));
}

TEST_CASE("independent set oracle") {
  CHECK(oracle_is(cycle(5), 2) == std::vector<Vertex>{0, 2});
  CHECK_FALSE(oracle_is(cycle(5), 3));
  CHECK(oracle_is(complete(3), 0) == std::vector<Vertex>{});
  CHECK_THROWS_AS(oracle_is(cycle(5), 4), BudgetExceeded);
  CHECK_THROWS_AS(oracle_is(cycle(5), -1), InvalidInput);
}

TEST_CASE("digraph oracles") {
  Digraph c = directed_cycle(4);
  auto seq = oracle_pcpsc(c, 2);
  REQUIRE(seq);
  CHECK(*seq == std::vector<ArcId>{0, 1});
  CHECK(is_pcpsc_witness(c, 2, *seq));
  CHECK_FALSE(is_pcpsc_witness(c, 1, *seq));
  CHECK_FALSE(is_pcpsc_witness(c, 1, {17}));

  // Two directed triangles sharing vertex 0: deleting 0 disconnects them.
  Digraph bow(5);
  for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}) bow.add_arc(a, b);
  CHECK_FALSE(oracle_vdpsc(bow, 1));
  CHECK(oracle_vdpsc(directed_cycle(3), 0));
  CHECK_FALSE(is_vdpsc_witness(bow, 1, {0}));
  CHECK_FALSE(is_vdpsc_witness(bow, 2, {1, 1}));

  Digraph big = directed_cycle(40);
  OracleBudget tiny;
  tiny.max_candidates = 100;
  CHECK_THROWS_AS(oracle_pcpsc(big, 3, tiny), BudgetExceeded);
  CHECK_THROWS_AS(oracle_vdpsc(big, 3, tiny), BudgetExceeded);
}
