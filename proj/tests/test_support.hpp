#pragma once

#include <vector>

#include "harp/coarsening.hpp"
#include "harp/graph.hpp"

namespace harp::testing {

inline bool is_connected(const Graph& g) {
  const NodeId n = g.node_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<NodeId> stack{0};
  seen[0] = true;
  std::size_t count = 0;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    ++count;
    for (NodeId w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

inline std::vector<std::size_t> preimage_sizes(const std::vector<NodeId>& parent,
                                               NodeId coarse_count) {
  std::vector<std::size_t> sizes(coarse_count, 0);
  for (NodeId p : parent) ++sizes[p];
  return sizes;
}

// Weight of fine edges whose endpoints merged into the same supernode.
inline double intra_supernode_weight(const Graph& fine, const std::vector<NodeId>& parent) {
  double w = 0.0;
  fine.for_each_edge([&](NodeId u, NodeId v, double weight) {
    if (parent[u] == parent[v]) w += weight;
  });
  return w;
}

}  // namespace harp::testing
