#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "biconn/graph.hpp"
#include "biconn/wbd_solver.hpp"

namespace biconn {

// Brute-force ground truth. Every oracle refuses (BudgetExceeded) rather
// than run past its budget. Vertex and edge limits apply to the undirected
// oracles; the digraph oracles are bounded by k and the candidate count,
// since gadget digraphs are large but shallow.
struct OracleBudget {
  int max_vertices = 10;
  int max_edges = 20;
  int max_k = 3;
  std::int64_t max_candidates = 10'000'000;
};

// Maximum-weight S ⊆ F with |S| <= k, G - S biconnected and w(S) >= w*.
std::optional<Solution> oracle_wbd(const WbdInstance& inst, const OracleBudget& budget = {});

// Arc sequence of length exactly k whose contraction keeps D strongly
// connected. Arc sets are tried in lexicographic order; orderings of a set
// only until one is applicable and good.
std::optional<std::vector<ArcId>> oracle_pcpsc(const Digraph& d, int k, const OracleBudget& budget = {});

// Exactly k vertices whose deletion keeps D strongly connected.
std::optional<std::vector<Vertex>> oracle_vdpsc(const Digraph& d, int k, const OracleBudget& budget = {});

// Independent set of size exactly k.
std::optional<std::vector<Vertex>> oracle_is(const UndirectedGraph& g, int k, const OracleBudget& budget = {});

// True iff the instance has no solution or has one avoiding e.
bool oracle_irrelevance(const WbdInstance& inst, EdgeId e, const OracleBudget& budget = {});

// Checks used by `verify`: exact semantics of a claimed witness.
bool is_pcpsc_witness(const Digraph& d, int k, const std::vector<ArcId>& sequence);
bool is_vdpsc_witness(const Digraph& d, int k, const std::vector<Vertex>& vertices);

}  // namespace biconn
