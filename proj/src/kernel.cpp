#include "biconn/kernel.hpp"

#include <algorithm>
#include <string>

#include "biconn/criticality.hpp"
#include "biconn/errors.hpp"
#include "flow_network.hpp"

namespace biconn {

namespace {

using detail::FlowNetwork;

std::optional<std::vector<Vertex>> cut_in_network(const Digraph& d, std::span<const Vertex> a,
                                                  std::span<const Vertex> b, std::span<const Vertex> r,
                                                  std::span<const char> cuttable) {
  const int bound = d.vertex_id_bound();
  std::vector<char> gone(bound, 0);
  for (Vertex v : r) gone[v] = 1;
  auto present = [&](Vertex v) { return d.has_vertex(v) && !gone[v]; };

  // in(v) = 2v, out(v) = 2v + 1, then source and sink.
  const int source = 2 * bound;
  const int sink = source + 1;
  FlowNetwork net(sink + 1);
  int finite = 0;
  for (Vertex v : d.vertices()) {
    if (!present(v)) continue;
    bool cut_ok = cuttable.empty() || cuttable[v];
    finite += cut_ok;
    net.add_arc(2 * v, 2 * v + 1, cut_ok ? 1 : FlowNetwork::kInfinite);
  }
  for (ArcId id : d.arcs()) {
    const Arc& arc = d.arc(id);
    if (present(arc.tail) && present(arc.head)) net.add_arc(2 * arc.tail + 1, 2 * arc.head, FlowNetwork::kInfinite);
  }
  for (Vertex v : a) {
    if (present(v)) net.add_arc(source, 2 * v, FlowNetwork::kInfinite);
  }
  for (Vertex v : b) {
    if (present(v)) net.add_arc(2 * v + 1, sink, FlowNetwork::kInfinite);
  }

  int value = net.augment(source, sink, finite + 1);
  if (value > finite) return std::nullopt;
  auto reach = net.residual_reachable(source);
  std::vector<Vertex> cut;
  for (Vertex v : d.vertices()) {
    if (present(v) && reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
  }
  return cut;
}

// Role a terminal plays in a triple. Roles that cannot change the family of
// feasible cuts are skipped: v+ has no in-arcs, so belonging to B alone is
// the same as not belonging to it; symmetrically for v- and A.
enum Role : char { kNone, kRemoved, kSource, kSink, kBoth };

}  // namespace

AuxiliaryDigraph build_auxiliary_digraph(const UndirectedGraph& g, std::span<const EdgeId> f) {
  AuxiliaryDigraph aux;
  const int n = g.vertex_id_bound();
  aux.graph_vertex_bound = n;
  aux.digraph = Digraph(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!g.has_vertex(v)) aux.digraph.remove_vertex(v);
  }
  aux.subdivision.assign(g.edge_id_bound(), kNoVertex);
  aux.plus.assign(n, kNoVertex);
  aux.minus.assign(n, kNoVertex);

  std::vector<EdgeId> sorted_f(f.begin(), f.end());
  std::sort(sorted_f.begin(), sorted_f.end());
  for (EdgeId e : sorted_f) aux.subdivision[e] = aux.digraph.add_vertex();

  // G1: F edges subdivided; every G1 edge becomes an arc pair.
  std::vector<std::vector<Vertex>> g1_neighbours(n);
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.edge(e);
    if (Vertex x = aux.subdivision[e]; x != kNoVertex) {
      for (Vertex end : {u, v}) {
        aux.digraph.add_arc(end, x);
        aux.digraph.add_arc(x, end);
        g1_neighbours[end].push_back(x);
      }
    } else {
      aux.digraph.add_arc(u, v);
      aux.digraph.add_arc(v, u);
      g1_neighbours[u].push_back(v);
      g1_neighbours[v].push_back(u);
    }
  }

  std::vector<char> endpoint(n, 0);
  for (EdgeId e : sorted_f) endpoint[g.edge(e).u] = endpoint[g.edge(e).v] = 1;
  for (Vertex v = 0; v < n; ++v) {
    if (!endpoint[v]) continue;
    aux.plus[v] = aux.digraph.add_vertex();
    aux.minus[v] = aux.digraph.add_vertex();
    for (Vertex w : g1_neighbours[v]) {
      aux.digraph.add_arc(aux.plus[v], w);
      aux.digraph.add_arc(w, aux.minus[v]);
    }
  }

  for (EdgeId e : sorted_f) aux.terminals.push_back(aux.subdivision[e]);
  for (Vertex v = 0; v < n; ++v) {
    if (!endpoint[v]) continue;
    aux.terminals.insert(aux.terminals.end(), {v, aux.plus[v], aux.minus[v]});
  }
  std::sort(aux.terminals.begin(), aux.terminals.end());
  return aux;
}

std::vector<Vertex> po_min_cut(const Digraph& d, std::span<const Vertex> a, std::span<const Vertex> b,
                               std::span<const Vertex> r) {
  auto cut = cut_in_network(d, a, b, r, {});
  if (!cut) throw InternalInconsistency("unrestricted vertex cut must exist");
  return *cut;
}

std::optional<std::vector<Vertex>> po_min_cut_within(const Digraph& d, std::span<const Vertex> a,
                                                     std::span<const Vertex> b, std::span<const Vertex> r,
                                                     std::span<const char> cuttable) {
  std::vector<char> mask(cuttable.begin(), cuttable.end());
  mask.resize(d.vertex_id_bound(), 0);
  return cut_in_network(d, a, b, r, mask);
}

std::vector<Vertex> cut_covering_set(const AuxiliaryDigraph& aux, const CutCoveringProvider& provider) {
  const Digraph& d = aux.digraph;
  if (provider.kind == ProviderKind::trivial) return d.vertices();

  const auto& x = aux.terminals;
  if (static_cast<int>(x.size()) > provider.max_terminals) {
    throw BudgetExceeded("exhaustive cut-covering provider needs |X| <= " + std::to_string(provider.max_terminals) +
                         " but |X| = " + std::to_string(x.size()) + "; use the trivial provider");
  }

  std::vector<char> is_plus(d.vertex_id_bound(), 0), is_minus(d.vertex_id_bound(), 0);
  for (Vertex v : aux.plus) {
    if (v != kNoVertex) is_plus[v] = 1;
  }
  for (Vertex v : aux.minus) {
    if (v != kNoVertex) is_minus[v] = 1;
  }
  std::vector<std::vector<Role>> roles;
  for (Vertex v : x) {
    if (is_plus[v]) roles.push_back({kNone, kRemoved, kSource, kBoth});
    else if (is_minus[v]) roles.push_back({kNone, kRemoved, kSink, kBoth});
    else roles.push_back({kNone, kRemoved, kSource, kSink, kBoth});
  }

  std::vector<char> in_z(d.vertex_id_bound(), 0);
  std::vector<std::size_t> digit(x.size(), 0);
  std::vector<Vertex> a, b, r;
  while (true) {
    a.clear();
    b.clear();
    r.clear();
    for (std::size_t i = 0; i < x.size(); ++i) {
      switch (roles[i][digit[i]]) {
        case kRemoved: r.push_back(x[i]); break;
        case kSource: a.push_back(x[i]); break;
        case kSink: b.push_back(x[i]); break;
        case kBoth: a.push_back(x[i]); b.push_back(x[i]); break;
        case kNone: break;
      }
    }
    for (Vertex v : po_min_cut(d, a, b, r)) in_z[v] = 1;

    std::size_t i = 0;
    while (i < x.size() && ++digit[i] == roles[i].size()) digit[i++] = 0;
    if (i == x.size()) break;
  }
  std::vector<Vertex> z;
  for (Vertex v : d.vertices()) {
    if (in_z[v]) z.push_back(v);
  }
  return z;
}

bool is_cut_covering(const AuxiliaryDigraph& aux, std::span<const Vertex> z) {
  const Digraph& d = aux.digraph;
  const auto& x = aux.terminals;
  std::vector<char> mask(d.vertex_id_bound(), 0);
  for (Vertex v : z) mask[v] = 1;
  // A terminal in R is gone whatever else it belongs to, so five roles per
  // terminal cover every triple of subsets of X.
  std::vector<int> digit(x.size(), 0);
  std::vector<Vertex> a, b, r;
  while (true) {
    a.clear();
    b.clear();
    r.clear();
    for (std::size_t i = 0; i < x.size(); ++i) {
      switch (digit[i]) {
        case kRemoved: r.push_back(x[i]); break;
        case kSource: a.push_back(x[i]); break;
        case kSink: b.push_back(x[i]); break;
        case kBoth: a.push_back(x[i]); b.push_back(x[i]); break;
        default: break;
      }
    }
    auto best = po_min_cut(d, a, b, r);
    auto inside = po_min_cut_within(d, a, b, r, mask);
    if (!inside || inside->size() != best.size()) return false;

    std::size_t i = 0;
    while (i < x.size() && ++digit[i] == 5) digit[i++] = 0;
    if (i == x.size()) break;
  }
  return true;
}

std::vector<Vertex> torso_set(const UndirectedGraph& g, std::span<const EdgeId> f, const AuxiliaryDigraph& aux,
                              std::span<const Vertex> z) {
  std::vector<char> in_y(g.vertex_id_bound(), 0);
  for (Vertex v : z) {
    if (aux.is_graph_vertex(v) && g.has_vertex(v)) in_y[v] = 1;
  }
  for (EdgeId e : f) in_y[g.edge(e).u] = in_y[g.edge(e).v] = 1;
  std::vector<Vertex> y;
  for (Vertex v : g.vertices()) {
    if (in_y[v]) y.push_back(v);
  }
  return y;
}

WbdInstance unit_instance(UndirectedGraph g, int k, std::vector<char> frozen) {
  WbdInstance inst;
  frozen.resize(g.edge_id_bound(), 0);
  inst.weight.assign(g.edge_id_bound(), 0.0);
  for (EdgeId e : g.edges()) inst.weight[e] = frozen[e] ? 0.0 : 1.0;
  inst.graph = std::move(g);
  inst.frozen = std::move(frozen);
  inst.k = k;
  inst.target = k;
  return inst;
}

bool is_unit_weight(const WbdInstance& inst) {
  for (EdgeId e : inst.candidates()) {
    if (inst.weight[e] != 1.0) return false;
  }
  return true;
}

WbdInstance constant_yes_instance() {
  UndirectedGraph g(4);
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = u + 1; v < 4; ++v) g.add_edge(u, v);
  }
  return normalize(unit_instance(std::move(g), 0, std::vector<char>(6, 1)));
}

WbdInstance constant_no_instance() {
  UndirectedGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  return normalize(unit_instance(std::move(g), 1, {1, 1, 1}));
}

std::optional<WbdInstance> rule_zero(const WbdInstance& inst) {
  if (inst.k != 0) return std::nullopt;
  return constant_yes_instance();
}

std::optional<EdgeId> rule_one_edge(const WbdInstance& inst, std::span<const Vertex> y) {
  const auto f = inst.candidates();
  std::vector<Vertex> blocked;
  for (EdgeId e : f) {
    auto [u, v] = inst.graph.edge(e);
    blocked.clear();
    for (Vertex w : y) {
      if (w != u && w != v) blocked.push_back(w);
    }
    if (has_path(inst.graph, u, v, {.edges = f, .vertices = blocked})) return e;
  }
  return std::nullopt;
}

std::optional<WbdInstance> rule_one(const WbdInstance& inst, std::span<const Vertex> y) {
  auto e = rule_one_edge(inst, y);
  if (!e) return std::nullopt;
  WbdInstance out = inst;
  out.graph.remove_edge(*e);
  out.k -= 1;
  out.target = out.k;
  return out;
}

WbdInstance rule_two_torso(const WbdInstance& inst, std::span<const Vertex> y) {
  const UndirectedGraph& g = inst.graph;
  std::vector<char> in_y(g.vertex_id_bound(), 0);
  for (Vertex v : y) in_y[v] = 1;

  WbdInstance out = inst;
  std::vector<char> seen(g.vertex_id_bound(), 0);
  std::vector<Vertex> stack;
  for (Vertex start : g.vertices()) {
    if (in_y[start] || seen[start]) continue;
    // One component of G - Y: its Y-neighbourhood becomes a clique.
    std::vector<Vertex> attach;
    std::vector<char> attached(g.vertex_id_bound(), 0);
    seen[start] = 1;
    stack.assign(1, start);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        Vertex w = g.other_end(e, v);
        if (in_y[w]) {
          if (!attached[w]) attached[w] = 1, attach.push_back(w);
        } else if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(attach.begin(), attach.end());
    for (std::size_t i = 0; i < attach.size(); ++i) {
      for (std::size_t j = i + 1; j < attach.size(); ++j) {
        if (out.graph.find_edge(attach[i], attach[j])) continue;
        out.graph.add_edge(attach[i], attach[j]);
        out.weight.push_back(0.0);
        out.frozen.push_back(1);
      }
    }
  }
  for (Vertex v : g.vertices()) {
    if (!in_y[v]) out.graph.remove_vertex(v);
  }
  return out;
}

namespace {

WbdInstance prepare(const WbdInstance& inst) {
  if (!is_unit_weight(inst)) throw InvalidInput("kernelization needs weight 1 on every potential solution edge");
  return normalize(unit_instance(inst.graph, inst.k, inst.frozen));
}

KernelResult constant(KernelResult result, KernelOutcome outcome) {
  result.instance = outcome == KernelOutcome::constant_yes ? constant_yes_instance() : constant_no_instance();
  result.outcome = outcome;
  return result;
}

void finish_stats(KernelResult& result) {
  result.stats.f_after = static_cast<int>(result.instance.candidates().size());
  result.stats.v_after = result.instance.graph.vertex_count();
  result.stats.k_after = result.instance.k;
}

}  // namespace

KernelResult bound_potential_edges(const WbdInstance& input, const KernelConfig& config) {
  KernelResult result;
  result.instance = prepare(input);
  WbdInstance& inst = result.instance;
  KernelStats& stats = result.stats;
  stats.f_before = static_cast<int>(inst.candidates().size());
  stats.v_before = inst.graph.vertex_count();
  stats.k_before = inst.k;

  if (inst.k == 0) {
    // The empty set already solves it; F = {} meets mu(0) = 0.
    stats.phase1_verdict = "empty";
    result = constant(std::move(result), KernelOutcome::constant_yes);
  } else {
    const int k = inst.k;
    const std::int64_t limit = config.lowered ? config.lowered->mu(k) : mu(k);
    // Same count as the solver: (limit - k) / k, rounded up, at least 1.
    const std::int64_t rich = std::max<std::int64_t>(1, (limit - k + k - 1) / k);
    while (static_cast<std::int64_t>(inst.candidates().size()) > limit) {
      const auto f = inst.candidates();
      const auto steps = greedy_deletion_set(inst, f);
      if (static_cast<int>(steps.size()) == k) {
        stats.phase1_verdict = "greedy";
        result = constant(std::move(result), KernelOutcome::constant_yes);
        break;
      }
      auto step = std::find_if(steps.begin(), steps.end(),
                               [&](const GreedyStep& s) { return s.newly_critical_heavy >= rich; });
      if (step == steps.end()) {
        if (!config.lowered) throw InternalInconsistency("phase 1 found no rich greedy step above mu(k)");
        stats.phase1_stopped_early = true;
        break;
      }
      std::vector<EdgeId> before;
      std::vector<Edge> before_ends;
      for (auto it = steps.begin(); it != step; ++it) {
        before.push_back(it->edge);
        before_ends.push_back(inst.graph.edge(it->edge));
      }
      UndirectedGraph host = inst.graph.without_edges(before);
      auto [p1, p2] = find_rich_flow(host, step->edge, f);
      PartnerAnalysis pa = build_partner_analysis(host, step->edge, p1, p2, f, before_ends);
      ++stats.partner_analyses;
      if (pa.distinct_partner_sets() > 3 * k) {
        solution_from_distinct_partners(pa, k);
        stats.phase1_verdict = "distinct-partners";
        result = constant(std::move(result), KernelOutcome::constant_yes);
        break;
      }
      auto stretch = find_clean_stretch(pa, k);
      if (!stretch) {
        if (!config.lowered) throw InternalInconsistency("phase 1 found no clean stretch");
        stats.phase1_stopped_early = true;
        break;
      }
      EdgeId drop = irrelevant_edge(pa, *stretch, inst.weight, k);
      inst.frozen[drop] = 1;
      inst.weight[drop] = 0.0;
      inst = normalize(std::move(inst));
      ++stats.irrelevant_edges;
    }
    if (!config.lowered && result.outcome == KernelOutcome::reduced &&
        static_cast<std::int64_t>(inst.candidates().size()) > mu(k)) {
      throw InternalInconsistency("phase 1 left more than mu(k) potential solution edges");
    }
  }
  stats.f_after_phase1 = static_cast<int>(result.instance.candidates().size());
  finish_stats(result);
  return result;
}

KernelResult kernelize(const WbdInstance& input, const KernelConfig& config) {
  KernelResult result = bound_potential_edges(input, config);
  if (result.outcome != KernelOutcome::reduced) return result;
  WbdInstance& inst = result.instance;
  KernelStats& stats = result.stats;

  std::vector<Vertex> y;
  while (true) {
    if (auto yes = rule_zero(inst)) {
      ++stats.rule_zero;
      result = constant(std::move(result), KernelOutcome::constant_yes);
      finish_stats(result);
      return result;
    }
    const auto f = inst.candidates();
    AuxiliaryDigraph aux = build_auxiliary_digraph(inst.graph, f);
    auto z = cut_covering_set(aux, config.provider);
    y = torso_set(inst.graph, f, aux, z);
    stats.z_size = static_cast<int>(z.size());
    stats.y_size = static_cast<int>(y.size());

    auto reduced = rule_one(inst, y);
    if (!reduced) break;
    ++stats.rule_one;
    if (!is_biconnected(reduced->graph)) {
      // The deleted edge lies in some solution whenever one exists, so a
      // graph it disconnects certifies a no-instance.
      result = constant(std::move(result), KernelOutcome::constant_no);
      finish_stats(result);
      return result;
    }
    inst = normalize(std::move(*reduced));
  }

  if (y.size() < 2) {
    // Only possible with F empty and k >= 1.
    result = constant(std::move(result), KernelOutcome::constant_no);
    finish_stats(result);
    return result;
  }
  const int edges_before = inst.graph.edge_id_bound();
  WbdInstance torso = rule_two_torso(inst, y);
  stats.shortcut_edges = torso.graph.edge_id_bound() - edges_before;
  if (!is_biconnected(torso.graph)) throw InternalInconsistency("torso of a biconnected graph is not biconnected");
  inst = normalize(std::move(torso));
  finish_stats(result);
  return result;
}

}  // namespace biconn
