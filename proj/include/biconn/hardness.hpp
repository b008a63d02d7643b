#pragma once

#include <string>
#include <vector>

#include "biconn/graph.hpp"

namespace biconn {

// Where each gadget vertex of the path-contraction instance came from.
// Indexed by vertex / edge id of the Independent Set graph.
struct PcGadgetMap {
  std::vector<Vertex> minus;                  // v-
  std::vector<Vertex> plus;                   // v+
  std::vector<ArcId> selection;               // (v-, v+)
  std::vector<Vertex> hub;                    // e-hat, kNoVertex for dead edge ids
  std::vector<std::vector<Vertex>> pendants;  // e-hat_1 .. e-hat_{k+1}
  std::vector<std::vector<ArcId>> b_arcs;     // B_e
  std::vector<std::vector<ArcId>> f_arcs;     // F_e
  Vertex x = kNoVertex;
  Vertex y = kNoVertex;
  std::vector<Vertex> x_pendants;
  std::vector<Vertex> y_pendants;
  std::vector<std::string> notes;             // per digraph vertex
};

struct PcInstance {
  Digraph digraph;
  PcGadgetMap map;
};

// Independent Set (G, k) -> path contraction preserving strong connectivity.
// |V(D)| = 2|V(G)| + (k+2)|E(G)| + 2k + 4.
PcInstance gen_pc_psc(const UndirectedGraph& g, int k);

struct VdInstance {
  Digraph digraph;
  std::vector<char> cycle_vertex;  // per digraph vertex: replaces or extends a marked vertex
  std::vector<std::string> notes;
};

// Independent Set (G, k) -> vertex deletion preserving strong connectivity,
// through the intermediate graph with undeletable (marked) vertices.
// |V(D)| = |V(G)| + (|E(G)| + 1)(k + 2).
VdInstance gen_vd_psc(const UndirectedGraph& g, int k);

}  // namespace biconn
