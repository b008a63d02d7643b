#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "biconn/graph.hpp"

namespace biconn {

// Undirected instance file:
//   p graph <n> <m>
//   e <u> <v> <weight> [inf]
// Vertices are 1-based in the file and 0-based in memory; the i-th `e` line
// becomes EdgeId i-1. `#` starts a comment, as does a leading `c` record.
struct AnnotatedGraph {
  UndirectedGraph graph;
  std::vector<double> weight;  // by EdgeId
  std::vector<char> frozen;    // by EdgeId, 1 = marked `inf`
};

AnnotatedGraph parse_graph(std::istream& in);
AnnotatedGraph parse_graph_string(const std::string& text);

// Live vertices are renumbered 1..n in ascending id order, live edges are
// written in ascending id order. `comments` go above the header.
void write_graph(std::ostream& out, const UndirectedGraph& g, std::span<const double> weight,
                 std::span<const char> frozen, std::span<const std::string> comments = {});

// Directed file:
//   p digraph <n> <m>
//   a <u> <v>
Digraph parse_digraph(std::istream& in);
Digraph parse_digraph_string(const std::string& text);

// `vertex_notes`, when non-empty, is indexed by vertex id and emitted as
// `# <file-id> <note>` lines.
void write_digraph(std::ostream& out, const Digraph& d, std::span<const std::string> vertex_notes = {},
                   std::span<const std::string> comments = {});

// Shortest decimal that round-trips.
std::string format_weight(double w);

}  // namespace biconn
