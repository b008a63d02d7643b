#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "biconn/graph.hpp"

namespace biconn {

// An edge is critical when deleting it destroys biconnectivity.
bool is_critical(const UndirectedGraph& g, EdgeId e);
std::vector<EdgeId> critical_set(const UndirectedGraph& g);
// Edges critical in g - e that were not critical in g. Requires e to be a
// non-critical edge of the biconnected graph g.
std::vector<EdgeId> newly_critical(const UndirectedGraph& g, EdgeId e);

// {edge, vertex} separates x from y. `removed` lets callers evaluate the cut
// in a subgraph without materialising it.
bool verify_mixed_cut(const UndirectedGraph& g, Vertex x, Vertex y, EdgeId edge, Vertex vertex,
                      std::span<const EdgeId> removed = {});

struct MixedCut {
  EdgeId edge;
  Vertex vertex;
  Vertex x;
  Vertex y;
};

// Interior vertices of p2 (in p2 order) that pair with `edge` into a mixed
// x-y cut of host - pivot. Throws InternalInconsistency if there are none.
std::vector<Vertex> partner_set(const UndirectedGraph& host, EdgeId pivot, const Path& p1, const Path& p2,
                                EdgeId edge);

// Per-index data for the gap between consecutive critical edges e_i, e_{i+1}.
// Only filled for non-exceptional i (identical singleton partners).
struct GapComponent {
  Vertex partner = kNoVertex;       // w(i)
  std::vector<Vertex> segment;      // P1 from v_i to u_{i+1}, inclusive
  std::vector<Vertex> vertices;     // Component[i, i+1], ascending
  std::vector<EdgeId> gamma;        // edges inside it plus edges to w(i), ascending
  bool affected = false;
};

// Everything the solver derives from one rich flow. Indices are 0-based:
// critical[i] is e_{i+1} in the usual 1-based notation, and gaps[i] sits
// between critical[i] and critical[i+1].
struct PartnerAnalysis {
  UndirectedGraph host;  // G' = G - F-hat (still contains the pivot)
  EdgeId pivot = -1;
  Vertex x = kNoVertex;
  Vertex y = kNoVertex;
  Path p1;
  Path p2;
  std::vector<EdgeId> critical;
  std::vector<std::pair<Vertex, Vertex>> ends;  // (u_i, v_i) oriented along p1
  std::vector<std::vector<Vertex>> partners;
  std::vector<int> switches;  // I-hat: i with partners[i] != partners[i+1]
  std::vector<std::optional<GapComponent>> gaps;
  std::vector<int> affected;  // J-hat
  std::vector<Edge> removed_before;

  int size() const { return static_cast<int>(critical.size()); }
  int distinct_partner_sets() const;
};

// `marked` restricts which newly-critical edges are tracked (the solver
// passes its Heavy set); `removed_before` holds the endpoints of F-hat, the
// edges already deleted from the original graph to obtain `host`.
PartnerAnalysis build_partner_analysis(const UndirectedGraph& host, EdgeId pivot, const Path& p1, const Path& p2,
                                       std::span<const EdgeId> marked, std::span<const Edge> removed_before);

struct Stretch {
  int first;  // a
  int last;   // b
};

// Clean stretch: b >= a + 2k + 3, one shared partner set throughout, and
// gaps a..b-1 present and unaffected. Returns the earliest qualifying
// maximal run. Throws InternalInconsistency when the
// counting guarantee (t >= 10k^2 + 23k, at most 3k partner sets) holds but no
// stretch exists.
std::optional<Stretch> find_clean_stretch(const PartnerAnalysis& pa, int k);

// Structural facts the analysis must satisfy; returns one message per
// violation (empty when everything holds).
std::vector<std::string> check_partner_invariants(const PartnerAnalysis& pa, int k);

// Human-readable dump for `--explain`.
void write_partner_analysis(std::ostream& out, const PartnerAnalysis& pa, std::optional<Stretch> stretch = {});

}  // namespace biconn
