#ifndef STABLEMANIP_MAX_FLOW_HPP_
#define STABLEMANIP_MAX_FLOW_HPP_

#include <cstdint>
#include <vector>

namespace stablemanip {

// Directed graph with non-negative integer arc capacities.
class FlowNetwork {
 public:
  explicit FlowNetwork(int num_nodes = 0) : num_nodes_(num_nodes) {}

  int add_node() { return num_nodes_++; }
  // Returns the arc index. Throws InputError on bad endpoints or a negative
  // capacity.
  int add_arc(int from, int to, int64_t capacity);

  int num_nodes() const { return num_nodes_; }
  int num_arcs() const { return static_cast<int>(tail_.size()); }
  int tail(int arc) const { return tail_[arc]; }
  int head(int arc) const { return head_[arc]; }
  int64_t capacity(int arc) const { return capacity_[arc]; }

 private:
  int num_nodes_;
  std::vector<int> tail_;
  std::vector<int> head_;
  std::vector<int64_t> capacity_;
};

struct MaxFlowResult {
  int64_t value = 0;
  std::vector<int64_t> arc_flow;  // indexed like the network's arcs
};

// Dinic's algorithm; the returned flow is integral.
MaxFlowResult max_flow(const FlowNetwork& net, int source, int sink);

}  // namespace stablemanip

#endif  // STABLEMANIP_MAX_FLOW_HPP_
