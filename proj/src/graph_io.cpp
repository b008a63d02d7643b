#include "biconn/graph_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "biconn/errors.hpp"

namespace biconn {

namespace {

std::vector<std::string> tokenize(const std::string& raw) {
  std::string line = raw.substr(0, raw.find('#'));
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  for (std::string t; ss >> t;) tokens.push_back(t);
  return tokens;
}

long parse_int(const std::string& token, int line, const char* what) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + token + "'");
  }
  return value;
}

double parse_weight(const std::string& token, int line) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
    throw ParseError(line, "expected decimal weight, got '" + token + "'");
  }
  if (value < 0) throw ParseError(line, "negative weight " + token);
  return value;
}

struct Header {
  long n = -1;
  long m = -1;
};

template <typename OnRecord>
Header scan(std::istream& in, const char* kind, char record, OnRecord&& on_record) {
  Header header;
  long seen = 0;
  int line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    auto tokens = tokenize(raw);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (header.n >= 0) throw ParseError(line_no, "duplicate header");
      if (tokens.size() != 4 || tokens[1] != kind) {
        throw ParseError(line_no, std::string("expected 'p ") + kind + " <n> <m>'");
      }
      header.n = parse_int(tokens[2], line_no, "vertex count");
      header.m = parse_int(tokens[3], line_no, "edge count");
      if (header.n < 0 || header.m < 0) throw ParseError(line_no, "negative count in header");
      on_record(tokens, line_no, header);
      continue;
    }
    if (tokens[0].size() != 1 || tokens[0][0] != record) {
      throw ParseError(line_no, "unknown record '" + tokens[0] + "'");
    }
    if (header.n < 0) throw ParseError(line_no, "record before header");
    if (++seen > header.m) throw ParseError(line_no, "more records than the header announced");
    on_record(tokens, line_no, header);
  }
  if (header.n < 0) throw ParseError(line_no, "missing header");
  if (seen != header.m) {
    throw ParseError(line_no, "header announced " + std::to_string(header.m) + " records, found " +
                                  std::to_string(seen));
  }
  return header;
}

Vertex parse_endpoint(const std::string& token, int line, long n) {
  long v = parse_int(token, line, "vertex");
  if (v < 1 || v > n) throw ParseError(line, "vertex " + token + " out of range 1.." + std::to_string(n));
  return static_cast<Vertex>(v - 1);
}

std::vector<int> dense_ids(int bound, const std::vector<Vertex>& live) {
  std::vector<int> id(bound, 0);
  for (std::size_t i = 0; i < live.size(); ++i) id[live[i]] = static_cast<int>(i) + 1;
  return id;
}

}  // namespace

std::string format_weight(double w) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, w);
  return std::string(buf, ptr);
}

AnnotatedGraph parse_graph(std::istream& in) {
  AnnotatedGraph out;
  scan(in, "graph", 'e', [&](const std::vector<std::string>& t, int line, const Header& h) {
    if (t[0] == "p") {
      out.graph = UndirectedGraph(static_cast<int>(h.n));
      return;
    }
    if (t.size() != 4 && t.size() != 5) throw ParseError(line, "expected 'e <u> <v> <weight> [inf]'");
    if (t.size() == 5 && t[4] != "inf") throw ParseError(line, "unexpected token '" + t[4] + "'");
    Vertex u = parse_endpoint(t[1], line, h.n);
    Vertex v = parse_endpoint(t[2], line, h.n);
    double w = parse_weight(t[3], line);
    if (u == v) throw ParseError(line, "self-loop");
    if (out.graph.find_edge(u, v)) throw ParseError(line, "parallel edge");
    out.graph.add_edge(u, v);
    out.weight.push_back(w);
    out.frozen.push_back(t.size() == 5 ? 1 : 0);
  });
  return out;
}

AnnotatedGraph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

void write_graph(std::ostream& out, const UndirectedGraph& g, std::span<const double> weight,
                 std::span<const char> frozen, std::span<const std::string> comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  auto live = g.vertices();
  auto id = dense_ids(g.vertex_id_bound(), live);
  out << "p graph " << live.size() << ' ' << g.edge_count() << '\n';
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.edge(e);
    double w = static_cast<std::size_t>(e) < weight.size() ? weight[e] : 0.0;
    out << "e " << id[u] << ' ' << id[v] << ' ' << format_weight(w);
    if (static_cast<std::size_t>(e) < frozen.size() && frozen[e]) out << " inf";
    out << '\n';
  }
}

Digraph parse_digraph(std::istream& in) {
  Digraph d;
  scan(in, "digraph", 'a', [&](const std::vector<std::string>& t, int line, const Header& h) {
    if (t[0] == "p") {
      d = Digraph(static_cast<int>(h.n));
      return;
    }
    if (t.size() != 3) throw ParseError(line, "expected 'a <u> <v>'");
    Vertex u = parse_endpoint(t[1], line, h.n);
    Vertex v = parse_endpoint(t[2], line, h.n);
    if (u == v) throw ParseError(line, "self-loop");
    if (d.find_arc(u, v)) throw ParseError(line, "duplicate arc");
    d.add_arc(u, v);
  });
  return d;
}

Digraph parse_digraph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_digraph(in);
}

void write_digraph(std::ostream& out, const Digraph& d, std::span<const std::string> vertex_notes,
                   std::span<const std::string> comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  auto live = d.vertices();
  auto id = dense_ids(d.vertex_id_bound(), live);
  for (Vertex v : live) {
    if (static_cast<std::size_t>(v) < vertex_notes.size() && !vertex_notes[v].empty()) {
      out << "# " << id[v] << ' ' << vertex_notes[v] << '\n';
    }
  }
  out << "p digraph " << live.size() << ' ' << d.arc_count() << '\n';
  for (ArcId a : d.arcs()) out << "a " << id[d.arc(a).tail] << ' ' << id[d.arc(a).head] << '\n';
}

}  // namespace biconn
