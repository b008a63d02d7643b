#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "biconn/graph.hpp"
#include "biconn/wbd_solver.hpp"

namespace biconn {

// D_{G,F}. Vertices of G keep their ids inside the digraph; subdivision and
// terminal-copy vertices are appended after vertex_id_bound() of G.
struct AuxiliaryDigraph {
  Digraph digraph;
  std::vector<Vertex> subdivision;  // per EdgeId of G: x_e, or kNoVertex if e is not in F
  std::vector<Vertex> plus;         // per Vertex of G: v+, or kNoVertex
  std::vector<Vertex> minus;        // per Vertex of G: v-, or kNoVertex
  std::vector<Vertex> terminals;    // X = X_E ∪ X_V, ascending
  int graph_vertex_bound = 0;       // digraph ids below this are vertices of G

  bool is_graph_vertex(Vertex v) const { return v < graph_vertex_bound; }
};

AuxiliaryDigraph build_auxiliary_digraph(const UndirectedGraph& g, std::span<const EdgeId> f);

// Minimum potentially overlapping A-B vertex cut in d - r. Terminals may be
// cut. Members of a and b that lie in r are ignored.
std::vector<Vertex> po_min_cut(const Digraph& d, std::span<const Vertex> a, std::span<const Vertex> b,
                               std::span<const Vertex> r);

// Same, but only vertices with cuttable[v] != 0 may enter the cut. Returns
// the cheapest such cut, or nothing if A and B cannot be separated that way.
std::optional<std::vector<Vertex>> po_min_cut_within(const Digraph& d, std::span<const Vertex> a,
                                                     std::span<const Vertex> b, std::span<const Vertex> r,
                                                     std::span<const char> cuttable);

enum class ProviderKind { trivial, exhaustive };

struct CutCoveringProvider {
  ProviderKind kind = ProviderKind::trivial;
  // The exhaustive provider runs one flow per reduced triple (A, B, R), so it
  // refuses terminal sets beyond this size. A single potential solution edge
  // already gives |X| = 7.
  int max_terminals = 7;
};

// Throws BudgetExceeded when the exhaustive provider is asked for more than
// max_terminals terminals.
std::vector<Vertex> cut_covering_set(const AuxiliaryDigraph& aux, const CutCoveringProvider& provider);

// Checks the cut-covering property straight from its definition: every triple
// A, B, R ⊆ X admits a minimum cut inside z. Runs 5^|X| pairs of flows.
bool is_cut_covering(const AuxiliaryDigraph& aux, std::span<const Vertex> z);

// Y = (Z ∩ V(G)) ∪ V(F), ascending.
std::vector<Vertex> torso_set(const UndirectedGraph& g, std::span<const EdgeId> f, const AuxiliaryDigraph& aux,
                              std::span<const Vertex> z);

// Unit-weight view of an instance: weight 1 on F, 0 on E-infinity, w* = k.
WbdInstance unit_instance(UndirectedGraph g, int k, std::vector<char> frozen);
bool is_unit_weight(const WbdInstance& inst);

WbdInstance constant_yes_instance();  // K_4, k = 0, every edge frozen
WbdInstance constant_no_instance();   // triangle, k = 1, every edge frozen

std::optional<WbdInstance> rule_zero(const WbdInstance& inst);
// First F edge (ascending id) whose endpoints are joined in G - F - (Y \ {u,v}).
std::optional<EdgeId> rule_one_edge(const WbdInstance& inst, std::span<const Vertex> y);
// Deletes that edge and lowers k. The result is not normalized and may fail
// to be biconnected, which certifies a no-instance.
std::optional<WbdInstance> rule_one(const WbdInstance& inst, std::span<const Vertex> y);
// G[Y] plus frozen zero-weight shortcut edges for every non-adjacent pair of
// Y joined by a path internally avoiding Y. Vertex ids outside Y are deleted,
// survivors keep their ids; shortcut edges get fresh ids.
WbdInstance rule_two_torso(const WbdInstance& inst, std::span<const Vertex> y);

enum class KernelOutcome { reduced, constant_yes, constant_no };

struct KernelStats {
  int f_before = 0;
  int f_after_phase1 = 0;
  int f_after = 0;
  int v_before = 0;
  int v_after = 0;
  int k_before = 0;
  int k_after = 0;
  int irrelevant_edges = 0;
  int rule_zero = 0;
  int rule_one = 0;
  int shortcut_edges = 0;
  int z_size = 0;
  int y_size = 0;
  int partner_analyses = 0;
  bool phase1_stopped_early = false;  // only with a lowered threshold
  std::string phase1_verdict;         // "", "empty", "greedy", "distinct-partners"
};

struct KernelConfig {
  CutCoveringProvider provider;
  // TEST ONLY, see LoweredThreshold. Phase 1 stops (rather than failing)
  // when the lowered bound cannot be reached.
  std::optional<LoweredThreshold> lowered;
};

struct KernelResult {
  WbdInstance instance;
  KernelOutcome outcome = KernelOutcome::reduced;
  KernelStats stats;
};

// Phase 1 alone: bounds |F| by mu(k) (or reports a yes-instance).
KernelResult bound_potential_edges(const WbdInstance& inst, const KernelConfig& config = {});
KernelResult kernelize(const WbdInstance& inst, const KernelConfig& config = {});

}  // namespace biconn
