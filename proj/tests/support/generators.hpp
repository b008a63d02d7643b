#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "biconn/graph.hpp"
#include "biconn/wbd_solver.hpp"

namespace biconn::testing {

using Rng = std::mt19937_64;

UndirectedGraph cycle(int n);
UndirectedGraph complete(int n);
UndirectedGraph path_graph(int n);
// u = 0 and v = 1 joined by paths with the given numbers of edges.
UndirectedGraph theta(std::initializer_list<int> lengths);
UndirectedGraph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

// G(n, p) with p drawn from [0.3, 0.8], resampled until biconnected.
UndirectedGraph random_biconnected(Rng& rng, int n);
Digraph random_digraph(Rng& rng, int n, double p);
Digraph directed_cycle(int n);

// Instance with the given weights (by edge id), normalized.
WbdInstance make_instance(const UndirectedGraph& g, int k, double target, std::vector<double> weight = {},
                          std::vector<char> frozen = {});
std::vector<double> random_weights(Rng& rng, const UndirectedGraph& g, int lo, int hi);

// Wheel: hub plus a rim cycle of `rim` vertices, randomly relabelled and
// with edges inserted in random order. Rim edges get weights in [3,5],
// spokes in [0,2]; each spoke is frozen with probability `freeze`.
WbdInstance random_wheel(Rng& rng, int rim, int k, double freeze);

// x = 0 and y = 1 joined by the pivot edge and by two rails of m edges each,
// with rungs between matching interior rail vertices. Rail p uses vertices
// 2..m, rail q uses m+1..2m-1. Every rail edge becomes critical once the
// pivot is gone, and consecutive rail edges have distinct partner sets.
struct Ladder {
  UndirectedGraph graph;
  EdgeId pivot;
  Path p;
  Path q;
};
Ladder ladder(int m);
Path path_through(const UndirectedGraph& g, std::vector<Vertex> vertices);
Path path_through(const UndirectedGraph& g, std::initializer_list<Vertex> vertices);

// Lowered threshold mu(k) = base + k used to reach the structural code paths
// of the solver on small graphs.
LoweredThreshold lowered(std::int64_t base);

}  // namespace biconn::testing
