#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "biconn/criticality.hpp"
#include "biconn/graph.hpp"

namespace biconn {

// Weighted Biconnectivity Deletion instance. Weights and the frozen flag
// (membership in E-infinity) are indexed by EdgeId.
struct WbdInstance {
  UndirectedGraph graph;
  int k = 0;
  double target = 0.0;  // w*
  std::vector<double> weight;
  std::vector<char> frozen;

  bool is_frozen(EdgeId e) const { return frozen[e] != 0; }
  // Potential solution edges F = E(G) \ E-infinity, ascending id.
  std::vector<EdgeId> candidates() const;
};

struct Solution {
  std::vector<EdgeId> edges;  // ascending id
  double weight = 0.0;
};

// 20k^3 + 46k^2 + k.
std::int64_t mu(int k);

// Freezes every critical edge and zeroes frozen weights. Idempotent.
WbdInstance normalize(WbdInstance inst);

// Potential solution edges by non-increasing weight, ties by ascending id.
std::vector<EdgeId> heavy_order(const WbdInstance& inst);
std::vector<EdgeId> heavy(const WbdInstance& inst, std::int64_t r);

bool is_solution(const WbdInstance& inst, std::span<const EdgeId> edges);

// Exhaustive search over subsets of F of size <= k. Returns a maximum-weight
// biconnectivity deletion set meeting the target. `limit` is the largest |F|
// the caller vouches for (mu(k) on the algorithmic path).
std::optional<Solution> enumerate_small(const WbdInstance& inst, std::int64_t limit);

struct GreedyStep {
  EdgeId edge;
  int newly_critical_heavy;  // |Critical_{G - S_{i-1}}(f_i) ∩ Heavy|
};

std::vector<GreedyStep> greedy_deletion_set(const WbdInstance& inst, std::span<const EdgeId> heavy_edges);

// Value-2 flow in host - pivot; the path carrying more marked newly-critical
// edges comes first.
std::pair<Path, Path> find_rich_flow(const UndirectedGraph& host, EdgeId pivot, std::span<const EdgeId> marked);

// Every third of the first 3k+1 pairwise-distinct partner sets; G - S is
// checked to be biconnected before returning.
std::vector<EdgeId> solution_from_distinct_partners(const PartnerAnalysis& pa, int k);

// Minimum-weight edge strictly inside the stretch, ties by ascending id.
EdgeId irrelevant_edge(const PartnerAnalysis& pa, Stretch stretch, std::span<const double> weight, int k);

// TEST ONLY. Replaces mu(k) by a much smaller threshold so the branching and
// irrelevant-edge code paths are reachable on small graphs. The counting
// arguments behind the algorithm no longer hold, so when a structural step
// finds nothing to work with the solver falls back to exhaustive search
// instead of reporting an internal inconsistency.
struct LoweredThreshold {
  std::function<std::int64_t(int)> mu;
};

struct SolverStats {
  std::int64_t nodes = 0;
  int max_depth = 0;
  std::int64_t max_branch_factor = 0;
  std::int64_t irrelevant_edges = 0;
  std::int64_t max_irrelevant_per_node = 0;
  std::int64_t enumerations = 0;
  std::int64_t partner_analyses = 0;
  std::int64_t distinct_partner_branches = 0;
  std::int64_t fallbacks = 0;

  void merge(const SolverStats& other);
};

struct SolverConfig {
  int jobs = 1;
  std::optional<LoweredThreshold> lowered;
  // Called for each partner analysis and each irrelevant edge the solver
  // commits to. The instance passed is the one before freezing.
  std::function<void(const PartnerAnalysis&, std::optional<Stretch>)> on_partner_analysis;
  std::function<void(const WbdInstance&, EdgeId)> on_irrelevant_edge;
};

struct SolveResult {
  std::optional<Solution> solution;
  SolverStats stats;
};

SolveResult solve(const WbdInstance& inst, const SolverConfig& config = {});

}  // namespace biconn
