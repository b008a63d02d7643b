#pragma once

#include <optional>
#include <span>
#include <vector>

namespace biconn {

using Vertex = int;
using EdgeId = int;
using ArcId = int;

inline constexpr Vertex kNoVertex = -1;

struct Edge {
  Vertex u;
  Vertex v;
};

struct Arc {
  Vertex tail;
  Vertex head;
};

// Simple undirected graph with stable identities. Deleted vertices and edges
// are tombstoned; their ids are never handed out again, so an EdgeId stays
// meaningful across every subgraph derived from the same original.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(int vertex_count);

  Vertex add_vertex();
  EdgeId add_edge(Vertex u, Vertex v);
  void remove_edge(EdgeId e);
  void remove_vertex(Vertex v);

  // Ids live in [0, vertex_id_bound()) and [0, edge_id_bound()).
  int vertex_id_bound() const { return static_cast<int>(vertex_alive_.size()); }
  int edge_id_bound() const { return static_cast<int>(edges_.size()); }
  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return edge_count_; }

  bool has_vertex(Vertex v) const;
  bool has_edge(EdgeId e) const;
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  Vertex other_end(EdgeId e, Vertex v) const;
  std::span<const EdgeId> incident(Vertex v) const { return incidence_[v]; }
  int degree(Vertex v) const { return static_cast<int>(incidence_[v].size()); }

  std::vector<Vertex> vertices() const;
  std::vector<EdgeId> edges() const;

  UndirectedGraph without_edges(std::span<const EdgeId> removed) const;
  UndirectedGraph without_edge(EdgeId e) const;

 private:
  std::vector<char> vertex_alive_;
  std::vector<Edge> edges_;
  std::vector<char> edge_alive_;
  std::vector<std::vector<EdgeId>> incidence_;
  int vertex_count_ = 0;
  int edge_count_ = 0;
};

// Simple digraph: no loops, at most one arc per ordered pair. Same
// tombstoning scheme as UndirectedGraph.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int vertex_count);

  Vertex add_vertex();
  ArcId add_arc(Vertex tail, Vertex head);
  void remove_arc(ArcId a);
  void remove_vertex(Vertex v);
  // Moves an existing arc to new endpoints, keeping its id.
  void reattach_arc(ArcId a, Vertex tail, Vertex head);

  int vertex_id_bound() const { return static_cast<int>(vertex_alive_.size()); }
  int arc_id_bound() const { return static_cast<int>(arcs_.size()); }
  int vertex_count() const { return vertex_count_; }
  int arc_count() const { return arc_count_; }

  bool has_vertex(Vertex v) const;
  bool has_arc(ArcId a) const;
  std::optional<ArcId> find_arc(Vertex tail, Vertex head) const;
  const Arc& arc(ArcId a) const { return arcs_[a]; }
  std::span<const ArcId> out_arcs(Vertex v) const { return out_[v]; }
  std::span<const ArcId> in_arcs(Vertex v) const { return in_[v]; }

  std::vector<Vertex> vertices() const;
  std::vector<ArcId> arcs() const;

 private:
  void unlink(ArcId a);

  std::vector<char> vertex_alive_;
  std::vector<Arc> arcs_;
  std::vector<char> arc_alive_;
  std::vector<std::vector<ArcId>> out_;
  std::vector<std::vector<ArcId>> in_;
  int vertex_count_ = 0;
  int arc_count_ = 0;
};

struct Path {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;  // edges[i] joins vertices[i] and vertices[i+1]

  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  std::span<const Vertex> interior() const;
};

// A set of internally vertex-disjoint source-sink paths, each oriented from
// source to sink.
struct FlowDecomposition {
  Vertex source = kNoVertex;
  Vertex sink = kNoVertex;
  std::vector<Path> paths;

  int value() const { return static_cast<int>(paths.size()); }
  bool participates(EdgeId e) const;
};

// Query-time deletions, so hot loops need not copy the graph.
struct Removed {
  std::span<const EdgeId> edges = {};
  std::span<const Vertex> vertices = {};
};

bool is_connected(const UndirectedGraph& g, Removed removed = {});
bool is_biconnected(const UndirectedGraph& g, Removed removed = {});
std::vector<Vertex> articulation_points(const UndirectedGraph& g, Removed removed = {});
bool has_path(const UndirectedGraph& g, Vertex from, Vertex to, Removed removed = {});
// Vertices reachable from any of `sources`, ascending.
std::vector<Vertex> reachable_from(const UndirectedGraph& g, std::span<const Vertex> sources,
                                   Removed removed = {});

bool is_strongly_connected(const Digraph& d);

FlowDecomposition max_flow(const UndirectedGraph& g, Vertex x, Vertex y);
FlowDecomposition max_flow_bounded(const UndirectedGraph& g, Vertex x, Vertex y, int cap,
                                   Removed removed = {});

struct Contraction {
  Digraph digraph;
  std::vector<Vertex> mapping;  // old vertex id -> new id, kNoVertex if gone
};

// Path-contracts the single arc a = (x, y): x and y are replaced by a fresh
// vertex z that keeps the in-arcs of x and the out-arcs of y. Out-arcs of x
// and in-arcs of y are dropped; arc ids of survivors are kept.
Contraction path_contract(const Digraph& d, ArcId a);
Contraction contract_sequence(const Digraph& d, std::span<const ArcId> arcs);

}  // namespace biconn
