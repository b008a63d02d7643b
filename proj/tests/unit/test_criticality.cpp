#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "biconn/criticality.hpp"
#include "biconn/errors.hpp"
#include "generators.hpp"

using namespace biconn;
using namespace biconn::testing;

namespace {

std::set<std::pair<Vertex, Vertex>> endpoints(const UndirectedGraph& g, const std::vector<EdgeId>& edges) {
  std::set<std::pair<Vertex, Vertex>> out;
  for (EdgeId e : edges) out.insert(std::minmax(g.edge(e).u, g.edge(e).v));
  return out;
}

// x=0 a=2 b=3 y=1 c=4 d=5: six-cycle x-a-b-y-c-d-x plus the chord (x,y).
UndirectedGraph six_cycle_chord() {
  return from_edges(6, {{0, 1}, {0, 2}, {2, 3}, {3, 1}, {1, 4}, {4, 5}, {5, 0}});
}

}  // namespace

TEST_CASE("critical edges of basic graphs") {
  UndirectedGraph c = cycle(6);
  for (EdgeId e : c.edges()) CHECK(is_critical(c, e));
  CHECK(critical_set(c).size() == 6);
  CHECK(critical_set(complete(4)).empty());

  UndirectedGraph t = theta({1, 2, 2});
  CHECK_FALSE(is_critical(t, 0));
  CHECK(endpoints(t, critical_set(t)) ==
        std::set<std::pair<Vertex, Vertex>>{{0, 2}, {1, 2}, {0, 3}, {1, 3}});
  CHECK_THROWS_AS(is_critical(t, 42), InvalidInput);
}

TEST_CASE("newly critical edges") {
  UndirectedGraph k4 = complete(4);
  CHECK(endpoints(k4, newly_critical(k4, *k4.find_edge(0, 1))) ==
        std::set<std::pair<Vertex, Vertex>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});

  // Prism: triangles 0-1-2 and 3-4-5, rungs (0,3), (1,4), (2,5).
  UndirectedGraph prism = from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(endpoints(prism, newly_critical(prism, *prism.find_edge(0, 3))) ==
        std::set<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}, {1, 4}, {2, 5}, {3, 4}, {3, 5}});

  // K_5 minus an edge is 3-connected.
  UndirectedGraph k5 = complete(5);
  CHECK(newly_critical(k5, 0).empty());

  UndirectedGraph c = cycle(4);
  CHECK_THROWS_AS(newly_critical(c, 0), InvalidInput);
  CHECK_THROWS_AS(newly_critical(k4, 99), InvalidInput);
}

TEST_CASE("mixed cuts") {
  UndirectedGraph c4 = cycle(4);  // 0-1-2-3-0
  CHECK(verify_mixed_cut(c4, 0, 2, *c4.find_edge(0, 1), 3));
  UndirectedGraph k4 = complete(4);
  for (EdgeId e : k4.edges()) {
    for (Vertex w = 2; w < 4; ++w) CHECK_FALSE(verify_mixed_cut(k4, 0, 1, e, w));
  }
  // theta(1,2,2): hubs 0 and 1, middles 2 and 3. The hub edge plus one
  // middle leaves the other middle path.
  UndirectedGraph t = theta({1, 2, 2});
  CHECK_FALSE(verify_mixed_cut(t, 0, 1, 0, 2));
  EdgeId hub = 0;
  CHECK(verify_mixed_cut(t, 0, 1, *t.find_edge(0, 3), 2, std::span<const EdgeId>(&hub, 1)));
  CHECK_THROWS_AS(verify_mixed_cut(t, 0, 1, 0, 0), InvalidInput);
}

TEST_CASE("partner sets on the six-cycle with a chord") {
  UndirectedGraph g = six_cycle_chord();
  Path p1 = path_through(g, {0, 2, 3, 1});
  Path p2 = path_through(g, {0, 5, 4, 1});
  CHECK(partner_set(g, 0, p1, p2, *g.find_edge(2, 3)) == std::vector<Vertex>{5, 4});
  CHECK(partner_set(g, 0, p1, p2, *g.find_edge(0, 2)) == std::vector<Vertex>{5, 4});
  // The chord leaves nothing newly critical: every cycle edge is critical
  // already, because a, b, c, d have degree two.
  CHECK(newly_critical(g, 0).empty());
}

TEST_CASE("partner analysis of a ladder") {
  Ladder l = ladder(7);
  std::vector<EdgeId> all = l.graph.edges();
  PartnerAnalysis pa = build_partner_analysis(l.graph, l.pivot, l.p, l.q, all, {});
  REQUIRE(pa.size() == 7);
  CHECK(pa.partners[0] == std::vector<Vertex>{8});
  for (int i = 1; i < 6; ++i) CHECK(pa.partners[i] == std::vector<Vertex>{7 + i, 8 + i});
  CHECK(pa.partners[6] == std::vector<Vertex>{13});
  CHECK(pa.distinct_partner_sets() == 7);
  CHECK(pa.switches.size() == 6);
  CHECK(pa.affected.empty());
  CHECK(check_partner_invariants(pa, 2).empty());
  CHECK_FALSE(find_clean_stretch(pa, 1).has_value());

  // Marking only part of the rail keeps P1 order.
  std::vector<EdgeId> some = {l.p.edges[5], l.p.edges[1]};
  PartnerAnalysis partial = build_partner_analysis(l.graph, l.pivot, l.p, l.q, some, {});
  CHECK(partial.critical == std::vector<EdgeId>{l.p.edges[1], l.p.edges[5]});
}

TEST_CASE("partner analysis of a wheel gives one long clean stretch") {
  // Hub 0, rim 1..9.
  UndirectedGraph g(10);
  for (int i = 1; i <= 9; ++i) g.add_edge(i, i % 9 + 1);
  for (int i = 1; i <= 9; ++i) g.add_edge(0, i);
  EdgeId pivot = *g.find_edge(1, 2);
  Path rim = path_through(g, {1, 9, 8, 7, 6, 5, 4, 3, 2});
  Path spokes = path_through(g, {1, 0, 2});
  PartnerAnalysis pa = build_partner_analysis(g, pivot, rim, spokes, g.edges(), {});
  REQUIRE(pa.size() == 8);
  for (const auto& p : pa.partners) CHECK(p == std::vector<Vertex>{0});
  CHECK(pa.switches.empty());
  CHECK(pa.affected.empty());
  for (const auto& gap : pa.gaps) {
    REQUIRE(gap.has_value());
    CHECK(gap->vertices.size() == 1);
    CHECK(gap->gamma.size() == 1);  // the spoke to the hub
  }
  CHECK(check_partner_invariants(pa, 2).empty());
  auto stretch = find_clean_stretch(pa, 2);
  REQUIRE(stretch.has_value());
  CHECK(stretch->first == 0);
  CHECK(stretch->last == 7);
  CHECK_FALSE(find_clean_stretch(pa, 3).has_value());

  // A previously deleted edge touching a gap marks it affected.
  Edge before{4, 0};
  PartnerAnalysis hit = build_partner_analysis(g, pivot, rim, spokes, g.edges(), std::span<const Edge>(&before, 1));
  CHECK(hit.affected == std::vector<int>{5});
  CHECK_FALSE(find_clean_stretch(hit, 2).has_value());
  CHECK(check_partner_invariants(hit, 2).empty());

  std::ostringstream dump;
  write_partner_analysis(dump, pa, stretch);
  CHECK(dump.str().find("stretch") != std::string::npos);
}

TEST_CASE("synthetic stretch search with evenly spread switches") {
  // k = 2: 3k = 6 switches across t = 10k^2 + 23k = 86 indices leaves a run
  // of at least 2k + 4 = 8 equal partners.
  const int k = 2, t = 10 * k * k + 23 * k;
  PartnerAnalysis pa;
  for (int i = 0; i < t; ++i) {
    pa.critical.push_back(i);
    pa.partners.push_back({1000 + i * 7 / t});
  }
  pa.gaps.resize(t - 1);
  for (int i = 0; i + 1 < t; ++i) {
    if (pa.partners[i] == pa.partners[i + 1]) pa.gaps[i] = GapComponent{};
    else pa.switches.push_back(i);
  }
  CHECK(pa.switches.size() == 6);
  auto stretch = find_clean_stretch(pa, k);
  REQUIRE(stretch.has_value());
  CHECK(stretch->last - stretch->first >= 2 * k + 3);
  CHECK(stretch->first == 0);
}

TEST_CASE("full-existence equivalence on random graphs") {
  Rng rng(21);
  for (int round = 0; round < 60; ++round) {
    UndirectedGraph g = random_biconnected(rng, 5 + round % 4);
    auto crit = critical_set(g);
    for (EdgeId e : g.edges()) {
      if (std::count(crit.begin(), crit.end(), e)) continue;
      auto fresh = newly_critical(g, e);
      auto [x, y] = g.edge(e);
      for (EdgeId f : g.edges()) {
        if (f == e || std::count(crit.begin(), crit.end(), f)) continue;
        bool listed = std::count(fresh.begin(), fresh.end(), f) > 0;
        EdgeId both[2] = {e, f};
        bool all_flows = max_flow_bounded(g, x, y, 2, {.edges = both}).value() <= 1;
        CHECK(listed == all_flows);
      }
    }
  }
}
