#include "biconn/hardness.hpp"

#include "biconn/errors.hpp"

namespace biconn {

namespace {

std::string name(Vertex v) { return "v" + std::to_string(v + 1); }
std::string name_edge(EdgeId e) { return "e" + std::to_string(e + 1); }

void require_instance(const UndirectedGraph& g, int k) {
  if (g.vertex_count() < 1) throw InvalidInput("independent set instance needs at least one vertex");
  if (k < 0) throw InvalidInput("k must be non-negative");
}

}  // namespace

PcInstance gen_pc_psc(const UndirectedGraph& g, int k) {
  require_instance(g, k);
  PcInstance out;
  Digraph& d = out.digraph;
  PcGadgetMap& map = out.map;
  auto fresh = [&](std::string note) {
    map.notes.push_back(std::move(note));
    return d.add_vertex();
  };

  map.minus.assign(g.vertex_id_bound(), kNoVertex);
  map.plus.assign(g.vertex_id_bound(), kNoVertex);
  map.selection.assign(g.vertex_id_bound(), -1);
  for (Vertex v : g.vertices()) {
    map.minus[v] = fresh(name(v) + "-");
    map.plus[v] = fresh(name(v) + "+");
  }
  map.hub.assign(g.edge_id_bound(), kNoVertex);
  map.pendants.resize(g.edge_id_bound());
  map.b_arcs.resize(g.edge_id_bound());
  map.f_arcs.resize(g.edge_id_bound());
  for (EdgeId e : g.edges()) {
    map.hub[e] = fresh(name_edge(e) + " (" + name(g.edge(e).u) + "," + name(g.edge(e).v) + ")");
    for (int i = 1; i <= k + 1; ++i) map.pendants[e].push_back(fresh(name_edge(e) + "." + std::to_string(i)));
  }
  map.x = fresh("x");
  map.y = fresh("y");
  for (int i = 1; i <= k + 1; ++i) map.x_pendants.push_back(fresh("x." + std::to_string(i)));
  for (int i = 1; i <= k + 1; ++i) map.y_pendants.push_back(fresh("y." + std::to_string(i)));

  std::vector<ArcId> to_minus(g.vertex_id_bound(), -1), from_plus(g.vertex_id_bound(), -1);
  for (Vertex v : g.vertices()) map.selection[v] = d.add_arc(map.minus[v], map.plus[v]);
  for (int i = 0; i <= k; ++i) {
    d.add_arc(map.x, map.x_pendants[i]);
    d.add_arc(map.x_pendants[i], map.x);
    d.add_arc(map.y, map.y_pendants[i]);
    d.add_arc(map.y_pendants[i], map.y);
  }
  ArcId back = d.add_arc(map.y, map.x);
  for (Vertex v : g.vertices()) {
    to_minus[v] = d.add_arc(map.x, map.minus[v]);
    from_plus[v] = d.add_arc(map.plus[v], map.y);
  }
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.edge(e);
    Vertex hub = map.hub[e];
    auto& b = map.b_arcs[e];
    b = {d.add_arc(map.minus[v], hub), d.add_arc(hub, map.plus[v]), d.add_arc(map.minus[u], hub),
         d.add_arc(hub, map.plus[u])};
    auto& f = map.f_arcs[e];
    f = b;
    for (Vertex p : map.pendants[e]) {
      f.push_back(d.add_arc(hub, p));
      f.push_back(d.add_arc(p, hub));
    }
    f.insert(f.end(), {map.selection[u], map.selection[v], to_minus[v], from_plus[v], to_minus[u], from_plus[u], back});
  }

  if (!is_strongly_connected(d)) throw InternalInconsistency("path-contraction gadget is not strongly connected");
  return out;
}

VdInstance gen_vd_psc(const UndirectedGraph& g, int k) {
  require_instance(g, k);
  VdInstance out;
  Digraph& d = out.digraph;
  auto fresh = [&](std::string note, bool cycle) {
    out.notes.push_back(std::move(note));
    out.cycle_vertex.push_back(cycle);
    return d.add_vertex();
  };

  // Intermediate graph H, built directly in bidirected form. Marked vertices
  // are the edge subdividers and the apex.
  std::vector<Vertex> original(g.vertex_id_bound(), kNoVertex);
  for (Vertex v : g.vertices()) original[v] = fresh(name(v), false);
  std::vector<Vertex> marked;
  auto both = [&](Vertex a, Vertex b) {
    d.add_arc(a, b);
    d.add_arc(b, a);
  };
  for (EdgeId e : g.edges()) {
    Vertex s = fresh("s" + std::to_string(e + 1) + " (" + name(g.edge(e).u) + "," + name(g.edge(e).v) + ")", true);
    both(s, original[g.edge(e).u]);
    both(s, original[g.edge(e).v]);
    marked.push_back(s);
  }
  Vertex apex = fresh("apex", true);
  for (Vertex v : g.vertices()) both(apex, original[v]);
  marked.push_back(apex);

  // Each marked vertex is closed into a directed cycle of length k + 2.
  for (Vertex w : marked) {
    Vertex prev = w;
    for (int i = 1; i <= k + 1; ++i) {
      Vertex c = fresh(out.notes[w].substr(0, out.notes[w].find(' ')) + ".c" + std::to_string(i), true);
      d.add_arc(prev, c);
      prev = c;
    }
    d.add_arc(prev, w);
  }

  if (!is_strongly_connected(d)) throw InternalInconsistency("vertex-deletion gadget is not strongly connected");
  return out;
}

}  // namespace biconn
