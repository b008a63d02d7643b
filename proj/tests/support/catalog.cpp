#include "catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace biconn::testing {

namespace {

int pair_bit(int i, int j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

// Colour refinement with invariant colour names, then every relabelling that
// keeps colour classes in order.
unsigned canonical_from_matrix(int n, const std::vector<std::vector<char>>& adj) {
  std::vector<int> colour(n, 0);
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (int w = 0; w < n; ++w) {
        if (adj[v][w]) sig[v].second.push_back(colour[w]);
      }
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    bool stable = std::set<int>(next.begin(), next.end()).size() == std::set<int>(colour.begin(), colour.end()).size();
    colour = next;
    if (stable) break;
  }

  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return colour[a] < colour[b]; });
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && colour[order[j]] == colour[order[i]]) ++j;
    cells.push_back({i, j});
    i = j;
  }

  unsigned best = ~0u;
  std::vector<int> perm = order;  // perm[position] = vertex
  auto rec = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      unsigned code = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (adj[perm[i]][perm[j]]) code |= 1u << pair_bit(i, j);
        }
      }
      best = std::min(best, code);
      return;
    }
    auto [lo, hi] = cells[cell];
    std::sort(perm.begin() + lo, perm.begin() + hi);
    do {
      self(self, cell + 1);
    } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
  };
  rec(rec, 0);
  return best;
}

UndirectedGraph from_code(int n, unsigned code) {
  UndirectedGraph g(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (code >> pair_bit(i, j) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace

unsigned canonical_code(const UndirectedGraph& g) {
  auto live = g.vertices();
  int n = static_cast<int>(live.size());
  if (n > 8) throw std::invalid_argument("canonical_code supports at most 8 vertices");
  std::vector<int> index(g.vertex_id_bound(), -1);
  for (int i = 0; i < n; ++i) index[live[i]] = i;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (EdgeId e : g.edges()) {
    int a = index[g.edge(e).u], b = index[g.edge(e).v];
    adj[a][b] = adj[b][a] = 1;
  }
  return canonical_from_matrix(n, adj);
}

const std::vector<UndirectedGraph>& graphs_up_to_iso(int n) {
  static std::mutex lock;
  static std::map<int, std::vector<UndirectedGraph>> cache;
  if (n < 1 || n > 8) throw std::invalid_argument("catalog covers 1..8 vertices");
  std::lock_guard guard(lock);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  std::vector<unsigned> codes = {0};
  for (int m = 2; m <= n; ++m) {
    std::set<unsigned> next;
    for (unsigned code : codes) {
      std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
      for (int j = 0; j < m - 1; ++j) {
        for (int i = 0; i < j; ++i) {
          if (code >> pair_bit(i, j) & 1) adj[i][j] = adj[j][i] = 1;
        }
      }
      for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
        for (int i = 0; i < m - 1; ++i) adj[i][m - 1] = adj[m - 1][i] = mask >> i & 1;
        next.insert(canonical_from_matrix(m, adj));
      }
    }
    codes.assign(next.begin(), next.end());
  }
  std::vector<UndirectedGraph> out;
  for (unsigned code : codes) out.push_back(from_code(n, code));
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<UndirectedGraph> biconnected_catalog(int n) {
  std::vector<UndirectedGraph> out;
  for (const auto& g : graphs_up_to_iso(n)) {
    if (is_biconnected(g)) out.push_back(g);
  }
  return out;
}

}  // namespace biconn::testing
