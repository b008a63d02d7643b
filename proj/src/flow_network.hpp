#pragma once

#include <vector>

namespace biconn::detail {

// Small residual network for unit/low-capacity augmenting-path flows.
// Arcs are stored in pairs: arc i and i^1 are residual partners.
class FlowNetwork {
 public:
  static constexpr int kInfinite = 1 << 28;

  explicit FlowNetwork(int node_count) : head_(node_count, -1) {}

  int add_arc(int from, int to, int capacity) {
    int id = static_cast<int>(to_.size());
    push(from, to, capacity);
    push(to, from, 0);
    return id;
  }

  int node_count() const { return static_cast<int>(head_.size()); }
  int flow_on(int arc) const { return base_[arc] - cap_[arc]; }
  int target(int arc) const { return to_[arc]; }
  int capacity(int arc) const { return cap_[arc]; }
  void set_capacity(int arc, int capacity) { base_[arc] = cap_[arc] = capacity; }

  template <typename Fn>
  void for_each_out(int node, Fn&& fn) const {
    for (int a = head_[node]; a != -1; a = next_[a]) fn(a);
  }

  void reset() { cap_ = base_; }

  // Augments one unit at a time until `limit` units are pushed or no
  // augmenting path remains. Nodes with blocked[node] != 0 are skipped.
  int augment(int source, int sink, int limit, const std::vector<char>* blocked = nullptr);

  // Nodes reachable from `source` in the residual network.
  std::vector<char> residual_reachable(int source, const std::vector<char>* blocked = nullptr) const;

 private:
  void push(int from, int to, int capacity) {
    to_.push_back(to);
    cap_.push_back(capacity);
    base_.push_back(capacity);
    next_.push_back(head_[from]);
    head_[from] = static_cast<int>(to_.size()) - 1;
  }

  std::vector<int> head_;
  std::vector<int> to_;
  std::vector<int> cap_;
  std::vector<int> base_;
  std::vector<int> next_;
  std::vector<int> parent_arc_;
  std::vector<int> queue_;
};

}  // namespace biconn::detail
