#include "flow_network.hpp"

#include <algorithm>

namespace biconn::detail {

int FlowNetwork::augment(int source, int sink, int limit, const std::vector<char>* blocked) {
  const int n = node_count();
  int pushed = 0;
  parent_arc_.assign(n, -1);
  queue_.resize(n);
  while (pushed < limit) {
    std::fill(parent_arc_.begin(), parent_arc_.end(), -1);
    parent_arc_[source] = -2;
    int qh = 0;
    int qt = 0;
    queue_[qt++] = source;
    while (qh < qt && parent_arc_[sink] == -1) {
      int u = queue_[qh++];
      for (int a = head_[u]; a != -1; a = next_[a]) {
        int v = to_[a];
        if (cap_[a] <= 0 || parent_arc_[v] != -1) continue;
        if (blocked && (*blocked)[v]) continue;
        parent_arc_[v] = a;
        queue_[qt++] = v;
      }
    }
    if (parent_arc_[sink] == -1) break;
    for (int v = sink; v != source;) {
      int a = parent_arc_[v];
      --cap_[a];
      ++cap_[a ^ 1];
      v = to_[a ^ 1];
    }
    ++pushed;
  }
  return pushed;
}

std::vector<char> FlowNetwork::residual_reachable(int source, const std::vector<char>* blocked) const {
  std::vector<char> seen(node_count(), 0);
  std::vector<int> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int a = head_[u]; a != -1; a = next_[a]) {
      int v = to_[a];
      if (cap_[a] <= 0 || seen[v]) continue;
      if (blocked && (*blocked)[v]) continue;
      seen[v] = 1;
      stack.push_back(v);
    }
  }
  return seen;
}

}  // namespace biconn::detail
