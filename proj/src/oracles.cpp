#include "biconn/oracles.hpp"

#include <algorithm>
#include <string>

#include "biconn/errors.hpp"

namespace biconn {

namespace {

std::int64_t saturating_binomial(std::int64_t n, int k, std::int64_t cap) {
  if (k < 0 || k > n) return 0;
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
    if (out > cap) return cap + 1;
  }
  return out;
}

void refuse(const std::string& what) { throw BudgetExceeded("oracle budget exceeded: " + what); }

void check_k(int k, const OracleBudget& budget) {
  if (k < 0) throw InvalidInput("k must be non-negative");
  if (k > budget.max_k) refuse("k = " + std::to_string(k) + " > " + std::to_string(budget.max_k));
}

void check_candidates(std::int64_t count, const OracleBudget& budget) {
  if (count > budget.max_candidates) refuse("more than " + std::to_string(budget.max_candidates) + " candidates");
}

void check_undirected(const UndirectedGraph& g, int k, const OracleBudget& budget) {
  if (g.vertex_count() > budget.max_vertices) refuse(std::to_string(g.vertex_count()) + " vertices");
  if (g.edge_count() > budget.max_edges) refuse(std::to_string(g.edge_count()) + " edges");
  check_k(k, budget);
}

// Calls visit(subset) for every size-`size` subset of `pool` in lexicographic
// order until it returns true.
template <typename T, typename Visit>
bool for_each_subset(const std::vector<T>& pool, int size, Visit&& visit) {
  std::vector<T> chosen;
  auto rec = [&](auto&& self, std::size_t next) -> bool {
    if (static_cast<int>(chosen.size()) == size) return visit(chosen);
    for (std::size_t i = next; i + (size - chosen.size()) <= pool.size(); ++i) {
      chosen.push_back(pool[i]);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

std::optional<Digraph> apply_sequence(const Digraph& d, const std::vector<ArcId>& sequence) {
  try {
    return contract_sequence(d, sequence).digraph;
  } catch (const InvalidInput&) {
    return std::nullopt;  // an arc vanished before its turn
  }
}

}  // namespace

std::optional<Solution> oracle_wbd(const WbdInstance& inst, const OracleBudget& budget) {
  check_undirected(inst.graph, inst.k, budget);
  std::vector<EdgeId> pool;
  for (EdgeId e : inst.graph.edges()) {
    if (!inst.frozen[e]) pool.push_back(e);
  }
  std::int64_t total = 0;
  for (int s = 0; s <= inst.k; ++s) total += saturating_binomial(static_cast<std::int64_t>(pool.size()), s, budget.max_candidates);
  check_candidates(total, budget);

  std::optional<Solution> best;
  for (int s = 0; s <= std::min<int>(inst.k, static_cast<int>(pool.size())); ++s) {
    for_each_subset(pool, s, [&](const std::vector<EdgeId>& subset) {
      double w = 0.0;
      for (EdgeId e : subset) w += inst.weight[e];
      if (w + 1e-9 < inst.target) return false;
      if (best && w <= best->weight) return false;
      if (is_biconnected(inst.graph, {.edges = subset})) best = Solution{subset, w};
      return false;
    });
  }
  return best;
}

bool is_pcpsc_witness(const Digraph& d, int k, const std::vector<ArcId>& sequence) {
  if (static_cast<int>(sequence.size()) != k) return false;
  for (ArcId a : sequence) {
    if (a < 0 || a >= d.arc_id_bound() || !d.has_arc(a)) return false;
  }
  auto result = apply_sequence(d, sequence);
  return result && is_strongly_connected(*result);
}

std::optional<std::vector<ArcId>> oracle_pcpsc(const Digraph& d, int k, const OracleBudget& budget) {
  check_k(k, budget);
  std::int64_t orderings = 1;
  for (int i = 2; i <= k; ++i) orderings *= i;
  std::int64_t sets = saturating_binomial(d.arc_count(), k, budget.max_candidates);
  check_candidates(sets > budget.max_candidates / orderings ? budget.max_candidates + 1 : sets * orderings, budget);

  std::optional<std::vector<ArcId>> found;
  for_each_subset(d.arcs(), k, [&](const std::vector<ArcId>& subset) {
    std::vector<ArcId> order = subset;
    do {
      if (is_pcpsc_witness(d, k, order)) {
        found = order;
        return true;
      }
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
  });
  return found;
}

bool is_vdpsc_witness(const Digraph& d, int k, const std::vector<Vertex>& vertices) {
  if (static_cast<int>(vertices.size()) != k) return false;
  std::vector<Vertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  Digraph rest = d;
  for (Vertex v : sorted) {
    if (v < 0 || v >= d.vertex_id_bound() || !d.has_vertex(v)) return false;
    rest.remove_vertex(v);
  }
  return is_strongly_connected(rest);
}

std::optional<std::vector<Vertex>> oracle_vdpsc(const Digraph& d, int k, const OracleBudget& budget) {
  check_k(k, budget);
  check_candidates(saturating_binomial(d.vertex_count(), k, budget.max_candidates), budget);
  std::optional<std::vector<Vertex>> found;
  for_each_subset(d.vertices(), k, [&](const std::vector<Vertex>& subset) {
    if (is_vdpsc_witness(d, k, subset)) found = subset;
    return found.has_value();
  });
  return found;
}

std::optional<std::vector<Vertex>> oracle_is(const UndirectedGraph& g, int k, const OracleBudget& budget) {
  if (g.vertex_count() > budget.max_vertices) refuse(std::to_string(g.vertex_count()) + " vertices");
  check_k(k, budget);
  check_candidates(saturating_binomial(g.vertex_count(), k, budget.max_candidates), budget);
  std::optional<std::vector<Vertex>> found;
  for_each_subset(g.vertices(), k, [&](const std::vector<Vertex>& subset) {
    for (std::size_t i = 0; i < subset.size(); ++i) {
      for (std::size_t j = i + 1; j < subset.size(); ++j) {
        if (g.find_edge(subset[i], subset[j])) return false;
      }
    }
    found = subset;
    return true;
  });
  return found;
}

bool oracle_irrelevance(const WbdInstance& inst, EdgeId e, const OracleBudget& budget) {
  if (!oracle_wbd(inst, budget)) return true;
  WbdInstance avoid = inst;
  avoid.frozen[e] = 1;
  return oracle_wbd(avoid, budget).has_value();
}

}  // namespace biconn
