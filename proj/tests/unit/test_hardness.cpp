#include <doctest.h>

#include "biconn/errors.hpp"
#include "biconn/hardness.hpp"
#include "biconn/oracles.hpp"
#include "catalog.hpp"
#include "generators.hpp"

using namespace biconn;
using namespace biconn::testing;

TEST_CASE("path-contraction gadget sizes") {
  PcInstance tri = gen_pc_psc(complete(3), 1);
  CHECK(tri.digraph.vertex_count() == 21);
  CHECK(tri.map.notes.size() == 21);
  CHECK(tri.map.notes[0] == "v1-");
  CHECK(tri.map.notes[1] == "v1+");
  CHECK(tri.map.notes[6] == "e1 (v1,v2)");
  CHECK(tri.map.notes[7] == "e1.1");
  CHECK(tri.map.notes[tri.map.x] == "x");
  CHECK(tri.map.notes[tri.map.y_pendants.back()] == "y.2");

  for (int n = 1; n <= 5; ++n) {
    for (const UndirectedGraph& g : graphs_up_to_iso(n)) {
      for (int k = 0; k <= 3; ++k) {
        PcInstance pc = gen_pc_psc(g, k);
        CHECK(pc.digraph.vertex_count() == 2 * n + (k + 2) * g.edge_count() + 2 * k + 4);
        CHECK(is_strongly_connected(pc.digraph));
        for (EdgeId e : g.edges()) {
          CHECK(pc.map.pendants[e].size() == static_cast<std::size_t>(k + 1));
          CHECK(pc.map.b_arcs[e].size() == 4);
          CHECK(pc.map.f_arcs[e].size() == 4 + 2 * (k + 1) + 7);
        }
      }
    }
  }
  CHECK_THROWS_AS(gen_pc_psc(UndirectedGraph(0), 1), InvalidInput);
  CHECK_THROWS_AS(gen_pc_psc(complete(2), -1), InvalidInput);
}

TEST_CASE("vertex-deletion gadget sizes") {
  VdInstance edge = gen_vd_psc(complete(2), 1);
  CHECK(edge.digraph.vertex_count() == 8);
  CHECK(edge.notes[2] == "s1 (v1,v2)");
  CHECK(edge.notes[3] == "apex");
  CHECK(edge.notes[4] == "s1.c1");
  CHECK_FALSE(edge.cycle_vertex[0]);
  CHECK(edge.cycle_vertex[2]);

  for (int n = 1; n <= 5; ++n) {
    for (const UndirectedGraph& g : graphs_up_to_iso(n)) {
      for (int k = 0; k <= 3; ++k) {
        VdInstance vd = gen_vd_psc(g, k);
        CHECK(vd.digraph.vertex_count() == n + (g.edge_count() + 1) * (k + 2));
        CHECK(is_strongly_connected(vd.digraph));
      }
    }
  }
}

TEST_CASE("gadgets follow independent sets on small graphs") {
  for (int n = 1; n <= 4; ++n) {
    for (const UndirectedGraph& g : graphs_up_to_iso(n)) {
      for (int k = 1; k <= 2; ++k) {
        bool is = oracle_is(g, k).has_value();
        VdInstance vd = gen_vd_psc(g, k);
        CHECK(oracle_vdpsc(vd.digraph, k).has_value() == is);
        PcInstance pc = gen_pc_psc(g, k);
        auto seq = oracle_pcpsc(pc.digraph, k);
        CHECK(seq.has_value() == is);
      }
    }
  }
}

TEST_CASE("selection arcs of an independent set form a witness") {
  UndirectedGraph g = cycle(5);
  PcInstance pc = gen_pc_psc(g, 2);
  CHECK(is_pcpsc_witness(pc.digraph, 2, {pc.map.selection[0], pc.map.selection[2]}));
  CHECK_FALSE(is_pcpsc_witness(pc.digraph, 2, {pc.map.selection[0], pc.map.selection[1]}));
  VdInstance vd = gen_vd_psc(g, 2);
  CHECK(is_vdpsc_witness(vd.digraph, 2, {0, 2}));
  CHECK_FALSE(is_vdpsc_witness(vd.digraph, 2, {0, 1}));
}
