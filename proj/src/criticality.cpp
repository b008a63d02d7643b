#include "biconn/criticality.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <string>

#include "biconn/errors.hpp"

namespace biconn {

bool is_critical(const UndirectedGraph& g, EdgeId e) {
  if (!g.has_edge(e)) throw InvalidInput("no edge with id " + std::to_string(e));
  return !is_biconnected(g, {.edges = std::span<const EdgeId>(&e, 1)});
}

std::vector<EdgeId> critical_set(const UndirectedGraph& g) {
  std::vector<EdgeId> out;
  for (EdgeId e : g.edges()) {
    if (is_critical(g, e)) out.push_back(e);
  }
  return out;
}

std::vector<EdgeId> newly_critical(const UndirectedGraph& g, EdgeId e) {
  if (!g.has_edge(e)) throw InvalidInput("no edge with id " + std::to_string(e));
  if (is_critical(g, e)) throw InvalidInput("edge " + std::to_string(e) + " is already critical");
  std::vector<char> was_critical(g.edge_id_bound(), 0);
  for (EdgeId f : critical_set(g)) was_critical[f] = 1;
  std::vector<EdgeId> out;
  for (EdgeId f : g.edges()) {
    if (f == e || was_critical[f]) continue;
    EdgeId pair[2] = {e, f};
    if (!is_biconnected(g, {.edges = pair})) out.push_back(f);
  }
  return out;
}

bool verify_mixed_cut(const UndirectedGraph& g, Vertex x, Vertex y, EdgeId edge, Vertex vertex,
                      std::span<const EdgeId> removed) {
  if (vertex == x || vertex == y) throw InvalidInput("mixed cut vertex must differ from the terminals");
  std::vector<EdgeId> gone(removed.begin(), removed.end());
  gone.push_back(edge);
  return !has_path(g, x, y, {.edges = gone, .vertices = std::span<const Vertex>(&vertex, 1)});
}

std::vector<Vertex> partner_set(const UndirectedGraph& host, EdgeId pivot, const Path& p1, const Path& p2,
                                EdgeId edge) {
  (void)p1;
  const Vertex x = p2.front();
  const Vertex y = p2.back();
  std::vector<Vertex> out;
  for (Vertex v : p2.interior()) {
    if (verify_mixed_cut(host, x, y, edge, v, std::span<const EdgeId>(&pivot, 1))) out.push_back(v);
  }
  if (out.empty()) {
    throw InternalInconsistency("critical edge " + std::to_string(edge) + " has no partner vertex on the second path");
  }
  return out;
}

int PartnerAnalysis::distinct_partner_sets() const {
  std::set<std::vector<Vertex>> seen(partners.begin(), partners.end());
  return static_cast<int>(seen.size());
}

PartnerAnalysis build_partner_analysis(const UndirectedGraph& host, EdgeId pivot, const Path& p1, const Path& p2,
                                       std::span<const EdgeId> marked, std::span<const Edge> removed_before) {
  PartnerAnalysis pa;
  pa.host = host;
  pa.pivot = pivot;
  pa.x = p1.front();
  pa.y = p1.back();
  pa.p1 = p1;
  pa.p2 = p2;
  pa.removed_before.assign(removed_before.begin(), removed_before.end());
  const Edge& pe = host.edge(pivot);
  if (!((pe.u == pa.x && pe.v == pa.y) || (pe.u == pa.y && pe.v == pa.x))) {
    throw InvalidInput("flow paths do not run between the pivot's endpoints");
  }

  std::vector<char> tracked(host.edge_id_bound(), 0);
  for (EdgeId f : newly_critical(host, pivot)) tracked[f] = 1;
  std::vector<char> is_marked(host.edge_id_bound(), 0);
  for (EdgeId f : marked) {
    if (f >= 0 && f < host.edge_id_bound()) is_marked[f] = 1;
  }
  std::vector<std::size_t> position;
  for (std::size_t j = 0; j < p1.edges.size(); ++j) {
    EdgeId f = p1.edges[j];
    if (!tracked[f] || !is_marked[f]) continue;
    pa.critical.push_back(f);
    pa.ends.emplace_back(p1.vertices[j], p1.vertices[j + 1]);
    position.push_back(j);
  }
  if (pa.critical.empty()) throw InvalidInput("no marked newly-critical edge lies on the first path");

  for (EdgeId f : pa.critical) pa.partners.push_back(partner_set(host, pivot, p1, p2, f));

  const int t = pa.size();
  for (int i = 0; i + 1 < t; ++i) {
    if (pa.partners[i] != pa.partners[i + 1]) pa.switches.push_back(i);
  }

  pa.gaps.resize(t > 0 ? t - 1 : 0);
  for (int i = 0; i + 1 < t; ++i) {
    if (pa.partners[i] != pa.partners[i + 1]) continue;
    if (pa.partners[i].size() != 1) {
      throw InternalInconsistency("equal consecutive partner sets of size " +
                                  std::to_string(pa.partners[i].size()) + " at index " + std::to_string(i));
    }
    GapComponent gap;
    gap.partner = pa.partners[i][0];
    gap.segment.assign(p1.vertices.begin() + static_cast<long>(position[i]) + 1,
                       p1.vertices.begin() + static_cast<long>(position[i + 1]) + 1);
    EdgeId cut[2] = {pa.critical[i], pa.critical[i + 1]};
    gap.vertices = reachable_from(host, gap.segment,
                                  {.edges = cut, .vertices = std::span<const Vertex>(&gap.partner, 1)});
    std::vector<char> inside(host.vertex_id_bound(), 0);
    for (Vertex v : gap.vertices) inside[v] = 1;
    for (EdgeId f : host.edges()) {
      auto [u, v] = host.edge(f);
      bool in_u = inside[u] || u == gap.partner;
      bool in_v = inside[v] || v == gap.partner;
      if (in_u && in_v && (inside[u] || inside[v])) gap.gamma.push_back(f);
    }
    for (const Edge& r : removed_before) {
      if (inside[r.u] || inside[r.v]) gap.affected = true;
    }
    if (gap.affected) pa.affected.push_back(i);
    pa.gaps[i] = std::move(gap);
  }
  return pa;
}

std::optional<Stretch> find_clean_stretch(const PartnerAnalysis& pa, int k) {
  const int t = pa.size();
  const int need = 2 * k + 3;
  int a = 0;
  while (a < t) {
    int b = a;
    while (b + 1 < t && pa.gaps[b] && !pa.gaps[b]->affected) ++b;
    if (b - a >= need) return Stretch{a, b};
    a = b + 1;
  }
  const long long guarantee = 10LL * k * k + 23LL * k;
  if (t >= guarantee && pa.distinct_partner_sets() <= 3 * k) {
    throw InternalInconsistency("no clean stretch among " + std::to_string(t) + " critical edges");
  }
  return std::nullopt;
}

std::vector<std::string> check_partner_invariants(const PartnerAnalysis& pa, int k) {
  std::vector<std::string> bad;
  auto note = [&](std::string msg) { bad.push_back(std::move(msg)); };
  const int t = pa.size();

  std::vector<int> p1_pos(pa.host.vertex_id_bound(), -1);
  for (std::size_t i = 0; i < pa.p1.vertices.size(); ++i) p1_pos[pa.p1.vertices[i]] = static_cast<int>(i);
  std::vector<int> p2_pos(pa.host.vertex_id_bound(), -1);
  for (std::size_t i = 0; i < pa.p2.vertices.size(); ++i) p2_pos[pa.p2.vertices[i]] = static_cast<int>(i);

  for (int i = 0; i < t; ++i) {
    auto [u, v] = pa.ends[i];
    if (p1_pos[u] < 0 || p1_pos[v] != p1_pos[u] + 1) note("edge " + std::to_string(i) + " is not oriented along P1");
    if (i > 0 && p1_pos[u] < p1_pos[pa.ends[i - 1].second]) note("edges out of P1 order at " + std::to_string(i));
    if (pa.partners[i].empty()) note("empty partner set at " + std::to_string(i));
    for (Vertex w : pa.partners[i]) {
      if (p2_pos[w] <= 0 || p2_pos[w] + 1 >= static_cast<int>(pa.p2.vertices.size())) {
        note("partner outside the interior of P2 at " + std::to_string(i));
      }
    }
  }

  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      if (pa.partners[i].empty() || pa.partners[j].empty()) continue;
      int max_i = 0;
      for (Vertex w : pa.partners[i]) max_i = std::max(max_i, p2_pos[w]);
      int min_j = 1 << 30;
      for (Vertex w : pa.partners[j]) min_j = std::min(min_j, p2_pos[w]);
      if (max_i > min_j) note("partner sets " + std::to_string(i) + " and " + std::to_string(j) + " cross on P2");
      int shared = 0;
      for (Vertex w : pa.partners[i]) {
        shared += std::count(pa.partners[j].begin(), pa.partners[j].end(), w) > 0 ? 1 : 0;
      }
      if (shared > 1) note("partner sets " + std::to_string(i) + " and " + std::to_string(j) + " share >1 vertex");
    }
  }

  if (pa.distinct_partner_sets() <= 3 * k && static_cast<int>(pa.switches.size()) > 3 * k) {
    note("more than 3k partner switches with at most 3k partner sets");
  }
  if (pa.affected.size() > 2 * pa.removed_before.size()) note("more affected components than F-hat endpoints");

  std::vector<int> owner(pa.host.vertex_id_bound(), -1);
  std::vector<int> gamma_owner(pa.host.edge_id_bound(), -1);
  for (int i = 0; i + 1 < t; ++i) {
    if (!pa.gaps[i]) continue;
    const GapComponent& gap = *pa.gaps[i];
    std::vector<char> inside(pa.host.vertex_id_bound(), 0);
    for (Vertex v : gap.vertices) {
      inside[v] = 1;
      if (p2_pos[v] >= 0) note("component " + std::to_string(i) + " touches P2");
      if (owner[v] >= 0) note("components " + std::to_string(owner[v]) + " and " + std::to_string(i) + " overlap");
      owner[v] = i;
    }
    for (Vertex s : gap.segment) {
      if (!inside[s]) note("segment " + std::to_string(i) + " leaves its component");
    }
    std::set<Vertex> boundary;
    for (Vertex v : gap.vertices) {
      for (EdgeId f : pa.host.incident(v)) {
        Vertex w = pa.host.other_end(f, v);
        if (!inside[w]) boundary.insert(w);
      }
    }
    std::set<Vertex> expected{pa.ends[i].first, pa.ends[i + 1].second, gap.partner};
    if (boundary != expected) note("component " + std::to_string(i) + " has unexpected neighbourhood");
    for (EdgeId f : gap.gamma) {
      if (gamma_owner[f] >= 0) note("gamma sets " + std::to_string(gamma_owner[f]) + " and " + std::to_string(i) + " share an edge");
      gamma_owner[f] = i;
    }
  }
  return bad;
}

void write_partner_analysis(std::ostream& out, const PartnerAnalysis& pa, std::optional<Stretch> stretch) {
  auto list = [&](const std::vector<Vertex>& vs) {
    out << '[';
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i] + 1;
    out << ']';
  };
  out << "partner-analysis pivot=" << pa.pivot + 1 << " x=" << pa.x + 1 << " y=" << pa.y + 1 << '\n';
  out << "  P1 ";
  list(pa.p1.vertices);
  out << "\n  P2 ";
  list(pa.p2.vertices);
  out << '\n';
  for (int i = 0; i < pa.size(); ++i) {
    out << "  e" << i + 1 << " edge=" << pa.critical[i] + 1 << " (" << pa.ends[i].first + 1 << ","
        << pa.ends[i].second + 1 << ") partners=";
    list(pa.partners[i]);
    if (i + 1 < pa.size() && pa.gaps[i]) {
      out << " component=";
      list(pa.gaps[i]->vertices);
      if (pa.gaps[i]->affected) out << " affected";
    }
    out << '\n';
  }
  out << "  switches=" << pa.switches.size() << " affected=" << pa.affected.size()
      << " distinct-partner-sets=" << pa.distinct_partner_sets() << '\n';
  if (stretch) out << "  clean-stretch=[" << stretch->first + 1 << "," << stretch->last + 1 << "]\n";
}

}  // namespace biconn
