#include "biconn/wbd_solver.hpp"

#include <algorithm>
#include <future>
#include <string>

#include "biconn/errors.hpp"

namespace biconn {

namespace {

constexpr double kWeightSlack = 1e-9;

bool meets_target(double weight, double target) { return weight + kWeightSlack >= target; }

std::int64_t threshold(const SolverConfig& config, int k) {
  return config.lowered ? config.lowered->mu(k) : mu(k);
}

// Smallest count of newly-critical Heavy edges that makes a greedy step
// "rich": (mu(k) - k) / k, which is 20k^2 + 46k for the real mu.
std::int64_t rich_threshold(std::int64_t m, int k) {
  std::int64_t num = m - k;
  std::int64_t value = num <= 0 ? 1 : (num + k - 1) / k;
  return std::max<std::int64_t>(value, 1);
}

struct Search {
  const SolverConfig& config;
  int root_k;

  std::optional<Solution> fallback(const WbdInstance& inst, SolverStats& stats, const char* why) {
    if (!config.lowered) throw InternalInconsistency(why);
    ++stats.fallbacks;
    ++stats.enumerations;
    return enumerate_small(inst, static_cast<std::int64_t>(inst.candidates().size()));
  }

  std::optional<Solution> branch(const WbdInstance& inst, const std::vector<EdgeId>& heavy_edges, int depth,
                                 SolverStats& stats) {
    std::vector<EdgeId> options;
    for (EdgeId e : heavy_edges) {
      if (is_biconnected(inst.graph, {.edges = std::span<const EdgeId>(&e, 1)})) options.push_back(e);
    }
    stats.max_branch_factor = std::max<std::int64_t>(stats.max_branch_factor, static_cast<std::int64_t>(options.size()));
    if (static_cast<std::int64_t>(options.size()) > threshold(config, inst.k)) {
      throw InternalInconsistency("branch factor exceeds the Heavy set size");
    }

    auto run_child = [&](EdgeId e, SolverStats& child_stats) -> std::optional<Solution> {
      WbdInstance child = inst;
      child.graph.remove_edge(e);
      child.k = inst.k - 1;
      child.target = std::max(0.0, inst.target - inst.weight[e]);
      child = normalize(std::move(child));
      auto sub = run(std::move(child), depth + 1, child_stats);
      if (!sub) return std::nullopt;
      sub->edges.push_back(e);
      std::sort(sub->edges.begin(), sub->edges.end());
      sub->weight += inst.weight[e];
      return sub;
    };

    std::vector<std::optional<Solution>> results(options.size());
    std::vector<SolverStats> child_stats(options.size());
    if (config.jobs > 1 && depth == 0 && options.size() > 1) {
      for (std::size_t start = 0; start < options.size(); start += static_cast<std::size_t>(config.jobs)) {
        std::size_t stop = std::min(options.size(), start + static_cast<std::size_t>(config.jobs));
        std::vector<std::future<std::optional<Solution>>> pending;
        for (std::size_t i = start; i < stop; ++i) {
          pending.push_back(std::async(std::launch::async, [&, i] { return run_child(options[i], child_stats[i]); }));
        }
        for (std::size_t i = start; i < stop; ++i) results[i] = pending[i - start].get();
      }
    } else {
      for (std::size_t i = 0; i < options.size(); ++i) results[i] = run_child(options[i], child_stats[i]);
    }

    std::optional<Solution> best;
    for (std::size_t i = 0; i < options.size(); ++i) {
      stats.merge(child_stats[i]);
      if (results[i] && (!best || results[i]->weight > best->weight + kWeightSlack)) best = std::move(results[i]);
    }
    return best;
  }

  std::optional<Solution> run(WbdInstance inst, int depth, SolverStats& stats) {
    ++stats.nodes;
    stats.max_depth = std::max(stats.max_depth, depth);
    if (depth > root_k) throw InternalInconsistency("branching deeper than the budget");
    if (inst.k <= 0) {
      if (meets_target(0.0, inst.target)) return Solution{};
      return std::nullopt;
    }

    std::int64_t here = 0;
    const std::int64_t edge_total = inst.graph.edge_count();
    while (true) {
      const auto candidates = inst.candidates();
      const std::int64_t m = threshold(config, inst.k);
      if (static_cast<std::int64_t>(candidates.size()) <= m) {
        ++stats.enumerations;
        return enumerate_small(inst, m);
      }

      const auto heavy_edges = heavy(inst, m);
      const auto steps = greedy_deletion_set(inst, heavy_edges);
      if (static_cast<int>(steps.size()) == inst.k) return branch(inst, heavy_edges, depth, stats);

      const std::int64_t rich = rich_threshold(m, inst.k);
      auto step = std::find_if(steps.begin(), steps.end(),
                               [&](const GreedyStep& s) { return s.newly_critical_heavy >= rich; });
      if (step == steps.end()) return fallback(inst, stats, "greedy deletion found no rich step");

      std::vector<EdgeId> before;
      std::vector<Edge> before_ends;
      for (auto it = steps.begin(); it != step; ++it) {
        before.push_back(it->edge);
        before_ends.push_back(inst.graph.edge(it->edge));
      }
      UndirectedGraph host = inst.graph.without_edges(before);
      auto [p1, p2] = find_rich_flow(host, step->edge, heavy_edges);
      PartnerAnalysis pa = build_partner_analysis(host, step->edge, p1, p2, heavy_edges, before_ends);
      ++stats.partner_analyses;

      if (pa.distinct_partner_sets() > 3 * inst.k) {
        solution_from_distinct_partners(pa, inst.k);
        ++stats.distinct_partner_branches;
        if (config.on_partner_analysis) config.on_partner_analysis(pa, std::nullopt);
        return branch(inst, heavy_edges, depth, stats);
      }

      auto stretch = find_clean_stretch(pa, inst.k);
      if (config.on_partner_analysis) config.on_partner_analysis(pa, stretch);
      if (!stretch) return fallback(inst, stats, "partner analysis found no clean stretch");

      EdgeId drop = irrelevant_edge(pa, *stretch, inst.weight, inst.k);
      if (config.on_irrelevant_edge) config.on_irrelevant_edge(inst, drop);
      inst.frozen[drop] = 1;
      inst.weight[drop] = 0.0;
      inst = normalize(std::move(inst));
      ++stats.irrelevant_edges;
      ++here;
      stats.max_irrelevant_per_node = std::max(stats.max_irrelevant_per_node, here);
      if (here > edge_total) throw InternalInconsistency("more irrelevant edges than edges");
    }
  }
};

}  // namespace

std::vector<EdgeId> WbdInstance::candidates() const {
  std::vector<EdgeId> out;
  for (EdgeId e : graph.edges()) {
    if (!frozen[e]) out.push_back(e);
  }
  return out;
}

std::int64_t mu(int k) {
  std::int64_t kk = k;
  return 20 * kk * kk * kk + 46 * kk * kk + kk;
}

WbdInstance normalize(WbdInstance inst) {
  if (!is_biconnected(inst.graph)) throw InvalidInput("instance graph is not biconnected");
  inst.weight.resize(inst.graph.edge_id_bound(), 0.0);
  inst.frozen.resize(inst.graph.edge_id_bound(), 0);
  for (EdgeId e : critical_set(inst.graph)) inst.frozen[e] = 1;
  for (EdgeId e = 0; e < inst.graph.edge_id_bound(); ++e) {
    if (inst.frozen[e]) inst.weight[e] = 0.0;
  }
  return inst;
}

std::vector<EdgeId> heavy_order(const WbdInstance& inst) {
  auto order = inst.candidates();
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return inst.weight[a] > inst.weight[b]; });
  return order;
}

std::vector<EdgeId> heavy(const WbdInstance& inst, std::int64_t r) {
  auto order = heavy_order(inst);
  if (r < 0) r = 0;
  if (static_cast<std::int64_t>(order.size()) > r) order.resize(static_cast<std::size_t>(r));
  return order;
}

bool is_solution(const WbdInstance& inst, std::span<const EdgeId> edges) {
  if (static_cast<int>(edges.size()) > inst.k) return false;
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  double total = 0.0;
  for (EdgeId e : sorted) {
    if (!inst.graph.has_edge(e) || inst.is_frozen(e)) return false;
    total += inst.weight[e];
  }
  return meets_target(total, inst.target) && is_biconnected(inst.graph, {.edges = sorted});
}

std::optional<Solution> enumerate_small(const WbdInstance& inst, std::int64_t limit) {
  const auto pool = inst.candidates();
  if (static_cast<std::int64_t>(pool.size()) > limit) {
    throw InternalInconsistency("enumerate_small called with " + std::to_string(pool.size()) +
                                " candidate edges, limit " + std::to_string(limit));
  }
  std::optional<Solution> best;
  std::vector<EdgeId> chosen;
  double chosen_weight = 0.0;

  // Deleting edges never restores biconnectivity, so only biconnected
  // partial sets are extended.
  auto visit = [&](auto&& self, std::size_t next) -> void {
    if (!best || chosen_weight > best->weight + kWeightSlack) best = Solution{chosen, chosen_weight};
    if (static_cast<int>(chosen.size()) == inst.k) return;
    for (std::size_t i = next; i < pool.size(); ++i) {
      chosen.push_back(pool[i]);
      if (is_biconnected(inst.graph, {.edges = chosen})) {
        chosen_weight += inst.weight[pool[i]];
        self(self, i + 1);
        chosen_weight -= inst.weight[pool[i]];
      }
      chosen.pop_back();
    }
  };
  if (is_biconnected(inst.graph)) visit(visit, 0);
  if (best && meets_target(best->weight, inst.target)) return best;
  return std::nullopt;
}

std::vector<GreedyStep> greedy_deletion_set(const WbdInstance& inst, std::span<const EdgeId> heavy_edges) {
  std::vector<GreedyStep> steps;
  std::vector<EdgeId> removed;
  std::vector<char> in_heavy(inst.graph.edge_id_bound(), 0);
  for (EdgeId e : heavy_edges) in_heavy[e] = 1;

  for (int i = 0; i < inst.k; ++i) {
    std::optional<EdgeId> pick;
    for (EdgeId e : heavy_edges) {
      if (std::find(removed.begin(), removed.end(), e) != removed.end()) continue;
      removed.push_back(e);
      bool ok = is_biconnected(inst.graph, {.edges = removed});
      removed.pop_back();
      if (ok) {
        pick = e;
        break;
      }
    }
    if (!pick) break;
    UndirectedGraph current = inst.graph.without_edges(removed);
    int count = 0;
    for (EdgeId f : newly_critical(current, *pick)) count += in_heavy[f];
    steps.push_back({*pick, count});
    removed.push_back(*pick);
  }
  return steps;
}

std::pair<Path, Path> find_rich_flow(const UndirectedGraph& host, EdgeId pivot, std::span<const EdgeId> marked) {
  const Edge& e = host.edge(pivot);
  FlowDecomposition flow = max_flow_bounded(host, e.u, e.v, 3, {.edges = std::span<const EdgeId>(&pivot, 1)});
  if (flow.value() != 2) {
    throw InternalInconsistency("expected an x-y flow of value exactly 2, found " + std::to_string(flow.value()));
  }
  std::vector<char> tracked(host.edge_id_bound(), 0);
  std::vector<char> is_marked(host.edge_id_bound(), 0);
  for (EdgeId f : marked) is_marked[f] = 1;
  for (EdgeId f : newly_critical(host, pivot)) tracked[f] = is_marked[f];
  auto richness = [&](const Path& p) {
    int n = 0;
    for (EdgeId f : p.edges) n += tracked[f];
    return n;
  };
  Path a = std::move(flow.paths[0]);
  Path b = std::move(flow.paths[1]);
  if (richness(b) > richness(a)) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

std::vector<EdgeId> solution_from_distinct_partners(const PartnerAnalysis& pa, int k) {
  std::vector<int> run_starts;
  for (int i = 0; i < pa.size(); ++i) {
    if (i == 0 || pa.partners[i] != pa.partners[i - 1]) run_starts.push_back(i);
  }
  if (static_cast<int>(run_starts.size()) < 3 * k + 1) {
    throw InvalidInput("need at least 3k+1 distinct partner sets, have " + std::to_string(run_starts.size()));
  }
  std::vector<EdgeId> picked;
  for (int j = 0; j < k; ++j) picked.push_back(pa.critical[run_starts[3 * j]]);
  if (!is_biconnected(pa.host, {.edges = picked})) {
    throw InternalInconsistency("every-third selection of distinct-partner edges is not a deletion set");
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

EdgeId irrelevant_edge(const PartnerAnalysis& pa, Stretch stretch, std::span<const double> weight, int k) {
  if (stretch.last - stretch.first < 2 * k + 3) throw InvalidInput("clean stretch shorter than 2k+4 edges");
  EdgeId best = pa.critical[stretch.first + 1];
  for (int i = stretch.first + 1; i < stretch.last; ++i) {
    EdgeId e = pa.critical[i];
    if (weight[e] < weight[best] || (weight[e] == weight[best] && e < best)) best = e;
  }
  return best;
}

void SolverStats::merge(const SolverStats& other) {
  nodes += other.nodes;
  max_depth = std::max(max_depth, other.max_depth);
  max_branch_factor = std::max(max_branch_factor, other.max_branch_factor);
  irrelevant_edges += other.irrelevant_edges;
  max_irrelevant_per_node = std::max(max_irrelevant_per_node, other.max_irrelevant_per_node);
  enumerations += other.enumerations;
  partner_analyses += other.partner_analyses;
  distinct_partner_branches += other.distinct_partner_branches;
  fallbacks += other.fallbacks;
}

SolveResult solve(const WbdInstance& inst, const SolverConfig& config) {
  WbdInstance start = normalize(inst);
  SolveResult result;
  Search search{config, start.k};
  result.solution = search.run(start, 0, result.stats);
  if (result.solution && !is_solution(start, result.solution->edges)) {
    throw InternalInconsistency("solver returned an invalid deletion set");
  }
  return result;
}

}  // namespace biconn
