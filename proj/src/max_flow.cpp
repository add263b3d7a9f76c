#include "stablemanip/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "stablemanip/errors.hpp"

namespace stablemanip {

int FlowNetwork::add_arc(int from, int to, int64_t capacity) {
  if (from < 0 || from >= num_nodes_ || to < 0 || to >= num_nodes_) {
    throw InputError("flow arc endpoint out of range");
  }
  if (capacity < 0) {
    throw InputError("flow arc capacity " + std::to_string(capacity) +
                     " is negative");
  }
  tail_.push_back(from);
  head_.push_back(to);
  capacity_.push_back(capacity);
  return num_arcs() - 1;
}

namespace {

// Residual graph with paired forward/backward edges: edge 2i is arc i,
// edge 2i+1 its reverse.
class Dinic {
 public:
  Dinic(const FlowNetwork& net, int source, int sink)
      : source_(source), sink_(sink), adj_(net.num_nodes()),
        level_(net.num_nodes()), next_(net.num_nodes()) {
    to_.reserve(2 * net.num_arcs());
    residual_.reserve(2 * net.num_arcs());
    for (int arc = 0; arc < net.num_arcs(); ++arc) {
      adj_[net.tail(arc)].push_back(static_cast<int>(to_.size()));
      to_.push_back(net.head(arc));
      residual_.push_back(net.capacity(arc));
      adj_[net.head(arc)].push_back(static_cast<int>(to_.size()));
      to_.push_back(net.tail(arc));
      residual_.push_back(0);
    }
  }

  int64_t run() {
    int64_t total = 0;
    while (build_levels()) {
      std::fill(next_.begin(), next_.end(), 0);
      while (int64_t pushed =
                 augment(source_, std::numeric_limits<int64_t>::max())) {
        total += pushed;
      }
    }
    return total;
  }

  // Flow on arc i is what its reverse edge has accumulated.
  int64_t flow(int arc) const { return residual_[2 * arc + 1]; }

 private:
  bool build_levels() {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    level_[source_] = 0;
    queue.push(source_);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int e : adj_[u]) {
        if (residual_[e] > 0 && level_[to_[e]] < 0) {
          level_[to_[e]] = level_[u] + 1;
          queue.push(to_[e]);
        }
      }
    }
    return level_[sink_] >= 0;
  }

  int64_t augment(int u, int64_t limit) {
    if (u == sink_) return limit;
    for (int& i = next_[u]; i < static_cast<int>(adj_[u].size()); ++i) {
      const int e = adj_[u][i];
      const int v = to_[e];
      if (residual_[e] <= 0 || level_[v] != level_[u] + 1) continue;
      const int64_t pushed = augment(v, std::min(limit, residual_[e]));
      if (pushed > 0) {
        residual_[e] -= pushed;
        residual_[e ^ 1] += pushed;
        return pushed;
      }
    }
    return 0;
  }

  int source_;
  int sink_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> to_;
  std::vector<int64_t> residual_;
  std::vector<int> level_;
  std::vector<int> next_;
};

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& net, int source, int sink) {
  if (source < 0 || source >= net.num_nodes() || sink < 0 ||
      sink >= net.num_nodes()) {
    throw InputError("max_flow: source or sink out of range");
  }
  if (source == sink) throw InputError("max_flow: source equals sink");
  Dinic dinic(net, source, sink);
  MaxFlowResult result;
  result.value = dinic.run();
  result.arc_flow.resize(net.num_arcs());
  for (int arc = 0; arc < net.num_arcs(); ++arc) {
    result.arc_flow[arc] = dinic.flow(arc);
  }
  return result;
}

}  // namespace stablemanip
