#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace harp {

using NodeId = std::uint32_t;
inline constexpr NodeId kInvalidNode = std::numeric_limits<NodeId>::max();

struct WeightedEdge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;
};

// Undirected weighted graph in CSR form with dense integer node ids.
// Neighbor lists are sorted by id, parallel edges are merged by summing
// their weights, and self-loops are dropped at construction. Instances are
// immutable afterwards and safe for concurrent reads.
class Graph {
 public:
  Graph() = default;

  // Builds the symmetric adjacency from an edge list. Endpoints must be
  // < node_count and weights positive; self-loops are silently discarded.
  // external_ids, when given, must have node_count entries.
  static Graph from_edges(NodeId node_count, std::vector<WeightedEdge> edges,
                          std::vector<std::string> external_ids = {});

  NodeId node_count() const {
    return offsets_.empty() ? 0 : static_cast<NodeId>(offsets_.size() - 1);
  }

  // Number of undirected edges.
  std::size_t edge_count() const { return neighbors_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  std::span<const double> weights(NodeId v) const {
    return {weights_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

  double weighted_degree(NodeId v) const { return weighted_degree_[v]; }

  // Sum of weights over undirected edges (each edge counted once).
  double total_edge_weight() const { return total_weight_; }

  bool has_edge(NodeId u, NodeId v) const;

  // 0 if the edge is absent.
  double edge_weight(NodeId u, NodeId v) const;

  bool has_external_ids() const { return !external_ids_.empty(); }

  // Original id from the input file, or the decimal internal id for graphs
  // that were generated rather than loaded.
  std::string external_id(NodeId v) const;

  const std::vector<std::string>& external_ids() const { return external_ids_; }

  // Each undirected edge once, with u < v.
  template <typename Fn>
  void for_each_edge(Fn&& fn) const {
    for (NodeId u = 0; u < node_count(); ++u) {
      for (std::size_t i = offsets_[u]; i < offsets_[u + 1]; ++i) {
        if (neighbors_[i] > u) fn(u, neighbors_[i], weights_[i]);
      }
    }
  }

  std::vector<WeightedEdge> edge_list() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> neighbors_;
  std::vector<double> weights_;
  std::vector<double> weighted_degree_;
  double total_weight_ = 0.0;
  std::vector<std::string> external_ids_;
};

struct ComponentResult {
  Graph graph;
  // new id -> id in the input graph
  std::vector<NodeId> original_ids;
};

// Induced subgraph on the largest connected component, ids re-densified in
// ascending original-id order. Ties between equal-sized components go to the
// one containing the smallest node id. Empty input gives an empty graph.
ComponentResult largest_connected_component(const Graph& g);

}  // namespace harp
