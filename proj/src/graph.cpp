#include "biconn/graph.hpp"

#include <algorithm>
#include <string>

#include "biconn/errors.hpp"
#include "flow_network.hpp"

namespace biconn {

namespace {

void erase_value(std::vector<int>& list, int value) {
  auto it = std::find(list.begin(), list.end(), value);
  if (it != list.end()) list.erase(it);
}

struct Masks {
  std::vector<char> edge_gone;
  std::vector<char> vertex_gone;

  Masks(const UndirectedGraph& g, Removed removed)
      : edge_gone(g.edge_id_bound(), 0), vertex_gone(g.vertex_id_bound(), 0) {
    for (EdgeId e : removed.edges) {
      if (e >= 0 && e < g.edge_id_bound()) edge_gone[e] = 1;
    }
    for (Vertex v : removed.vertices) {
      if (v >= 0 && v < g.vertex_id_bound()) vertex_gone[v] = 1;
    }
  }

  bool vertex_ok(const UndirectedGraph& g, Vertex v) const { return g.has_vertex(v) && !vertex_gone[v]; }
};

}  // namespace

// ---------------------------------------------------------------------------
// UndirectedGraph

UndirectedGraph::UndirectedGraph(int vertex_count) {
  for (int i = 0; i < vertex_count; ++i) add_vertex();
}

Vertex UndirectedGraph::add_vertex() {
  vertex_alive_.push_back(1);
  incidence_.emplace_back();
  ++vertex_count_;
  return vertex_id_bound() - 1;
}

EdgeId UndirectedGraph::add_edge(Vertex u, Vertex v) {
  if (!has_vertex(u) || !has_vertex(v)) {
    throw InvalidInput("edge endpoint is not a vertex: (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
  if (find_edge(u, v)) {
    throw InvalidInput("parallel edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  edges_.push_back({u, v});
  edge_alive_.push_back(1);
  EdgeId id = edge_id_bound() - 1;
  incidence_[u].push_back(id);
  incidence_[v].push_back(id);
  ++edge_count_;
  return id;
}

void UndirectedGraph::remove_edge(EdgeId e) {
  if (!has_edge(e)) throw InvalidInput("no edge with id " + std::to_string(e));
  edge_alive_[e] = 0;
  erase_value(incidence_[edges_[e].u], e);
  erase_value(incidence_[edges_[e].v], e);
  --edge_count_;
}

void UndirectedGraph::remove_vertex(Vertex v) {
  if (!has_vertex(v)) throw InvalidInput("no vertex with id " + std::to_string(v));
  while (!incidence_[v].empty()) remove_edge(incidence_[v].back());
  vertex_alive_[v] = 0;
  --vertex_count_;
}

bool UndirectedGraph::has_vertex(Vertex v) const {
  return v >= 0 && v < vertex_id_bound() && vertex_alive_[v];
}

bool UndirectedGraph::has_edge(EdgeId e) const { return e >= 0 && e < edge_id_bound() && edge_alive_[e]; }

std::optional<EdgeId> UndirectedGraph::find_edge(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return std::nullopt;
  Vertex probe = degree(u) <= degree(v) ? u : v;
  Vertex target = probe == u ? v : u;
  for (EdgeId e : incidence_[probe]) {
    if (other_end(e, probe) == target) return e;
  }
  return std::nullopt;
}

Vertex UndirectedGraph::other_end(EdgeId e, Vertex v) const {
  const Edge& ed = edges_[e];
  return ed.u == v ? ed.v : ed.u;
}

std::vector<Vertex> UndirectedGraph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(vertex_count_);
  for (Vertex v = 0; v < vertex_id_bound(); ++v) {
    if (vertex_alive_[v]) out.push_back(v);
  }
  return out;
}

std::vector<EdgeId> UndirectedGraph::edges() const {
  std::vector<EdgeId> out;
  out.reserve(edge_count_);
  for (EdgeId e = 0; e < edge_id_bound(); ++e) {
    if (edge_alive_[e]) out.push_back(e);
  }
  return out;
}

UndirectedGraph UndirectedGraph::without_edges(std::span<const EdgeId> removed) const {
  UndirectedGraph copy = *this;
  for (EdgeId e : removed) copy.remove_edge(e);
  return copy;
}

UndirectedGraph UndirectedGraph::without_edge(EdgeId e) const {
  return without_edges(std::span<const EdgeId>(&e, 1));
}

// ---------------------------------------------------------------------------
// Digraph

Digraph::Digraph(int vertex_count) {
  for (int i = 0; i < vertex_count; ++i) add_vertex();
}

Vertex Digraph::add_vertex() {
  vertex_alive_.push_back(1);
  out_.emplace_back();
  in_.emplace_back();
  ++vertex_count_;
  return vertex_id_bound() - 1;
}

ArcId Digraph::add_arc(Vertex tail, Vertex head) {
  if (!has_vertex(tail) || !has_vertex(head)) {
    throw InvalidInput("arc endpoint is not a vertex: (" + std::to_string(tail) + "," + std::to_string(head) + ")");
  }
  if (tail == head) throw InvalidInput("self-loop at vertex " + std::to_string(tail));
  if (find_arc(tail, head)) {
    throw InvalidInput("duplicate arc (" + std::to_string(tail) + "," + std::to_string(head) + ")");
  }
  arcs_.push_back({tail, head});
  arc_alive_.push_back(1);
  ArcId id = arc_id_bound() - 1;
  out_[tail].push_back(id);
  in_[head].push_back(id);
  ++arc_count_;
  return id;
}

void Digraph::unlink(ArcId a) {
  erase_value(out_[arcs_[a].tail], a);
  erase_value(in_[arcs_[a].head], a);
}

void Digraph::remove_arc(ArcId a) {
  if (!has_arc(a)) throw InvalidInput("no arc with id " + std::to_string(a));
  unlink(a);
  arc_alive_[a] = 0;
  --arc_count_;
}

void Digraph::remove_vertex(Vertex v) {
  if (!has_vertex(v)) throw InvalidInput("no vertex with id " + std::to_string(v));
  while (!out_[v].empty()) remove_arc(out_[v].back());
  while (!in_[v].empty()) remove_arc(in_[v].back());
  vertex_alive_[v] = 0;
  --vertex_count_;
}

void Digraph::reattach_arc(ArcId a, Vertex tail, Vertex head) {
  if (!has_arc(a)) throw InvalidInput("no arc with id " + std::to_string(a));
  if (!has_vertex(tail) || !has_vertex(head) || tail == head) {
    throw InvalidInput("cannot reattach arc " + std::to_string(a));
  }
  auto existing = find_arc(tail, head);
  if (existing && *existing != a) {
    throw InvalidInput("reattaching arc " + std::to_string(a) + " would duplicate arc " + std::to_string(*existing));
  }
  unlink(a);
  arcs_[a] = {tail, head};
  out_[tail].push_back(a);
  in_[head].push_back(a);
}

bool Digraph::has_vertex(Vertex v) const { return v >= 0 && v < vertex_id_bound() && vertex_alive_[v]; }

bool Digraph::has_arc(ArcId a) const { return a >= 0 && a < arc_id_bound() && arc_alive_[a]; }

std::optional<ArcId> Digraph::find_arc(Vertex tail, Vertex head) const {
  if (!has_vertex(tail) || !has_vertex(head)) return std::nullopt;
  for (ArcId a : out_[tail]) {
    if (arcs_[a].head == head) return a;
  }
  return std::nullopt;
}

std::vector<Vertex> Digraph::vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < vertex_id_bound(); ++v) {
    if (vertex_alive_[v]) out.push_back(v);
  }
  return out;
}

std::vector<ArcId> Digraph::arcs() const {
  std::vector<ArcId> out;
  for (ArcId a = 0; a < arc_id_bound(); ++a) {
    if (arc_alive_[a]) out.push_back(a);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Paths and flows

std::span<const Vertex> Path::interior() const {
  if (vertices.size() <= 2) return {};
  return std::span<const Vertex>(vertices).subspan(1, vertices.size() - 2);
}

bool FlowDecomposition::participates(EdgeId e) const {
  for (const Path& p : paths) {
    if (std::find(p.edges.begin(), p.edges.end(), e) != p.edges.end()) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Connectivity

std::vector<Vertex> reachable_from(const UndirectedGraph& g, std::span<const Vertex> sources, Removed removed) {
  Masks masks(g, removed);
  std::vector<char> seen(g.vertex_id_bound(), 0);
  std::vector<Vertex> stack;
  for (Vertex s : sources) {
    if (masks.vertex_ok(g, s) && !seen[s]) {
      seen[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(u)) {
      if (masks.edge_gone[e]) continue;
      Vertex w = g.other_end(e, u);
      if (seen[w] || masks.vertex_gone[w]) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_id_bound(); ++v) {
    if (seen[v]) out.push_back(v);
  }
  return out;
}

bool has_path(const UndirectedGraph& g, Vertex from, Vertex to, Removed removed) {
  auto reached = reachable_from(g, std::span<const Vertex>(&from, 1), removed);
  return std::binary_search(reached.begin(), reached.end(), to);
}

bool is_connected(const UndirectedGraph& g, Removed removed) {
  Masks masks(g, removed);
  Vertex start = kNoVertex;
  int alive = 0;
  for (Vertex v : g.vertices()) {
    if (masks.vertex_gone[v]) continue;
    if (start == kNoVertex) start = v;
    ++alive;
  }
  if (alive == 0) return true;
  return static_cast<int>(reachable_from(g, std::span<const Vertex>(&start, 1), removed).size()) == alive;
}

namespace {

// Iterative Hopcroft-Tarjan low-link pass. Returns the number of vertices
// reached from the first live vertex and fills is_cut.
int low_link_pass(const UndirectedGraph& g, const Masks& masks, std::vector<char>& is_cut) {
  const int bound = g.vertex_id_bound();
  is_cut.assign(bound, 0);
  Vertex root = kNoVertex;
  for (Vertex v = 0; v < bound; ++v) {
    if (masks.vertex_ok(g, v)) {
      root = v;
      break;
    }
  }
  if (root == kNoVertex) return 0;

  std::vector<int> disc(bound, -1);
  std::vector<int> low(bound, 0);
  std::vector<EdgeId> parent_edge(bound, -1);
  std::vector<std::size_t> cursor(bound, 0);
  std::vector<Vertex> stack{root};
  int time = 0;
  int root_children = 0;
  disc[root] = low[root] = time++;

  while (!stack.empty()) {
    Vertex u = stack.back();
    auto inc = g.incident(u);
    if (cursor[u] < inc.size()) {
      EdgeId e = inc[cursor[u]++];
      if (masks.edge_gone[e] || e == parent_edge[u]) continue;
      Vertex w = g.other_end(e, u);
      if (masks.vertex_gone[w]) continue;
      if (disc[w] == -1) {
        disc[w] = low[w] = time++;
        parent_edge[w] = e;
        if (u == root) ++root_children;
        stack.push_back(w);
      } else {
        low[u] = std::min(low[u], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    if (u == root) continue;
    Vertex p = g.other_end(parent_edge[u], u);
    low[p] = std::min(low[p], low[u]);
    if (p != root && low[u] >= disc[p]) is_cut[p] = 1;
  }
  if (root_children >= 2) is_cut[root] = 1;
  return time;
}

}  // namespace

std::vector<Vertex> articulation_points(const UndirectedGraph& g, Removed removed) {
  Masks masks(g, removed);
  std::vector<char> is_cut;
  low_link_pass(g, masks, is_cut);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_id_bound(); ++v) {
    if (is_cut[v]) out.push_back(v);
  }
  return out;
}

bool is_biconnected(const UndirectedGraph& g, Removed removed) {
  Masks masks(g, removed);
  int alive = 0;
  for (Vertex v : g.vertices()) {
    if (!masks.vertex_gone[v]) ++alive;
  }
  if (alive < 2) return false;
  std::vector<char> is_cut;
  if (low_link_pass(g, masks, is_cut) != alive) return false;
  return std::none_of(is_cut.begin(), is_cut.end(), [](char c) { return c != 0; });
}

bool is_strongly_connected(const Digraph& d) {
  auto verts = d.vertices();
  if (verts.size() <= 1) return true;
  auto sweep = [&](bool forward) {
    std::vector<char> seen(d.vertex_id_bound(), 0);
    std::vector<Vertex> stack{verts.front()};
    seen[verts.front()] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (ArcId a : forward ? d.out_arcs(u) : d.in_arcs(u)) {
        Vertex w = forward ? d.arc(a).head : d.arc(a).tail;
        if (seen[w]) continue;
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
    return count == verts.size();
  };
  return sweep(true) && sweep(false);
}

// ---------------------------------------------------------------------------
// Vertex-capacitated flow on the split graph: in(v) = 2v, out(v) = 2v + 1.

FlowDecomposition max_flow_bounded(const UndirectedGraph& g, Vertex x, Vertex y, int cap, Removed removed) {
  if (!g.has_vertex(x) || !g.has_vertex(y)) throw InvalidInput("flow terminal is not a vertex");
  if (x == y) throw InvalidInput("flow terminals must differ");
  Masks masks(g, removed);
  if (masks.vertex_gone[x] || masks.vertex_gone[y]) throw InvalidInput("flow terminal was removed");

  detail::FlowNetwork net(2 * g.vertex_id_bound());
  std::vector<int> arc_edge;  // network arc id / 2 -> edge id, -1 for split arcs
  for (Vertex v : g.vertices()) {
    if (masks.vertex_gone[v]) continue;
    int capacity = (v == x || v == y) ? detail::FlowNetwork::kInfinite : 1;
    net.add_arc(2 * v, 2 * v + 1, capacity);
    arc_edge.push_back(-1);
  }
  for (EdgeId e : g.edges()) {
    if (masks.edge_gone[e]) continue;
    auto [u, v] = g.edge(e);
    if (masks.vertex_gone[u] || masks.vertex_gone[v]) continue;
    net.add_arc(2 * u + 1, 2 * v, 1);
    arc_edge.push_back(e);
    net.add_arc(2 * v + 1, 2 * u, 1);
    arc_edge.push_back(e);
  }

  FlowDecomposition flow;
  flow.source = x;
  flow.sink = y;
  int value = net.augment(2 * x + 1, 2 * y, std::max(cap, 0));

  // Peel paths off the flow. Opposite units on the same edge cancel, so
  // track per-arc remaining flow and walk out(x) -> ... -> in(y).
  std::vector<int> remaining(2 * arc_edge.size(), 0);
  for (std::size_t a = 0; a < remaining.size(); a += 2) remaining[a] = net.flow_on(static_cast<int>(a));
  for (std::size_t a = 0; a < remaining.size(); a += 2) {
    int e = arc_edge[a / 2];
    if (e < 0) continue;
    // Edge arcs are added as consecutive pairs (u->v, v->u).
    if (a + 2 < remaining.size() && arc_edge[a / 2 + 1] == e && remaining[a] > 0 && remaining[a + 2] > 0) {
      int c = std::min(remaining[a], remaining[a + 2]);
      remaining[a] -= c;
      remaining[a + 2] -= c;
    }
  }
  for (int p = 0; p < value; ++p) {
    Path path;
    path.vertices.push_back(x);
    int node = 2 * x + 1;
    while (node != 2 * y) {
      bool advanced = false;
      net.for_each_out(node, [&](int a) {
        if (advanced || (a & 1) || remaining[a] <= 0) return;
        --remaining[a];
        int next = net.target(a);
        int e = arc_edge[a / 2];
        if (e >= 0) {
          path.edges.push_back(e);
          path.vertices.push_back(next / 2);
        }
        node = next;
        advanced = true;
      });
      if (!advanced) throw InternalInconsistency("flow decomposition lost a unit of flow");
    }
    flow.paths.push_back(std::move(path));
  }
  return flow;
}

FlowDecomposition max_flow(const UndirectedGraph& g, Vertex x, Vertex y) {
  return max_flow_bounded(g, x, y, g.vertex_count() + 1);
}

// ---------------------------------------------------------------------------
// Path contraction

Contraction path_contract(const Digraph& d, ArcId a) {
  if (!d.has_arc(a)) throw InvalidInput("arc " + std::to_string(a) + " does not exist");
  Contraction out{d, std::vector<Vertex>(d.vertex_id_bound(), kNoVertex)};
  Digraph& g = out.digraph;
  const Vertex x = d.arc(a).tail;
  const Vertex y = d.arc(a).head;
  const Vertex z = g.add_vertex();

  std::vector<ArcId> x_in(g.in_arcs(x).begin(), g.in_arcs(x).end());
  std::vector<ArcId> y_out(g.out_arcs(y).begin(), g.out_arcs(y).end());
  for (ArcId b : x_in) {
    Vertex t = g.arc(b).tail;
    if (t == y) {
      g.remove_arc(b);  // (y, x) would become a loop
    } else {
      g.reattach_arc(b, t, z);
    }
  }
  for (ArcId b : y_out) {
    if (!g.has_arc(b)) continue;
    g.reattach_arc(b, z, g.arc(b).head);
  }
  g.remove_vertex(x);  // drops out-arcs of x, including a
  g.remove_vertex(y);  // drops in-arcs of y

  for (Vertex v : d.vertices()) out.mapping[v] = (v == x || v == y) ? z : v;
  return out;
}

Contraction contract_sequence(const Digraph& d, std::span<const ArcId> arcs) {
  Contraction acc{d, std::vector<Vertex>(d.vertex_id_bound(), kNoVertex)};
  for (Vertex v : d.vertices()) acc.mapping[v] = v;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (!acc.digraph.has_arc(arcs[i])) {
      throw InvalidInput("arc " + std::to_string(arcs[i]) + " (position " + std::to_string(i) +
                         ") vanished before its contraction");
    }
    Contraction step = path_contract(acc.digraph, arcs[i]);
    for (Vertex& v : acc.mapping) {
      if (v != kNoVertex) v = step.mapping[v];
    }
    acc.digraph = std::move(step.digraph);
  }
  return acc;
}

}  // namespace biconn
