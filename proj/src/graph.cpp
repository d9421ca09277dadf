#include "harp/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace harp {

Graph Graph::from_edges(NodeId node_count, std::vector<WeightedEdge> edges,
                        std::vector<std::string> external_ids) {
  if (!external_ids.empty() && external_ids.size() != node_count) {
    throw std::invalid_argument("graph: external id count does not match node count");
  }

  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(node_count) + 1, 0);
  g.external_ids_ = std::move(external_ids);

  // Drop self-loops up front, validate the rest.
  std::erase_if(edges, [](const WeightedEdge& e) { return e.u == e.v; });
  for (const WeightedEdge& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw std::invalid_argument("graph: edge endpoint " +
                                  std::to_string(std::max(e.u, e.v)) +
                                  " out of range");
    }
    if (!(e.weight > 0.0)) {
      throw std::invalid_argument("graph: edge weight must be positive");
    }
  }

  std::vector<std::size_t> counts(node_count, 0);
  for (const WeightedEdge& e : edges) {
    ++counts[e.u];
    ++counts[e.v];
  }
  for (NodeId v = 0; v < node_count; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + counts[v];
  }

  std::vector<NodeId> nbr(g.offsets_[node_count]);
  std::vector<double> wgt(g.offsets_[node_count]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const WeightedEdge& e : edges) {
    nbr[cursor[e.u]] = e.v;
    wgt[cursor[e.u]++] = e.weight;
    nbr[cursor[e.v]] = e.u;
    wgt[cursor[e.v]++] = e.weight;
  }

  // Sort each list and merge duplicates by weight sum.
  g.neighbors_.reserve(nbr.size());
  g.weights_.reserve(nbr.size());
  std::vector<std::size_t> new_offsets(static_cast<std::size_t>(node_count) + 1, 0);
  std::vector<std::pair<NodeId, double>> scratch;
  for (NodeId v = 0; v < node_count; ++v) {
    scratch.clear();
    for (std::size_t i = g.offsets_[v]; i < g.offsets_[v + 1]; ++i) {
      scratch.emplace_back(nbr[i], wgt[i]);
    }
    std::sort(scratch.begin(), scratch.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < scratch.size();) {
      NodeId id = scratch[i].first;
      double w = 0.0;
      while (i < scratch.size() && scratch[i].first == id) {
        w += scratch[i].second;
        ++i;
      }
      g.neighbors_.push_back(id);
      g.weights_.push_back(w);
    }
    new_offsets[v + 1] = g.neighbors_.size();
  }
  g.offsets_ = std::move(new_offsets);

  g.weighted_degree_.assign(node_count, 0.0);
  for (NodeId v = 0; v < node_count; ++v) {
    double sum = 0.0;
    for (double w : g.weights(v)) sum += w;
    g.weighted_degree_[v] = sum;
  }
  double total = 0.0;
  g.for_each_edge([&](NodeId, NodeId, double w) { total += w; });
  g.total_weight_ = total;
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto ns = neighbors(u);
  return std::binary_search(ns.begin(), ns.end(), v);
}

double Graph::edge_weight(NodeId u, NodeId v) const {
  auto ns = neighbors(u);
  auto it = std::lower_bound(ns.begin(), ns.end(), v);
  if (it == ns.end() || *it != v) return 0.0;
  return weights(u)[static_cast<std::size_t>(it - ns.begin())];
}

std::string Graph::external_id(NodeId v) const {
  if (v < external_ids_.size()) return external_ids_[v];
  return std::to_string(v);
}

std::vector<WeightedEdge> Graph::edge_list() const {
  std::vector<WeightedEdge> edges;
  edges.reserve(edge_count());
  for_each_edge([&](NodeId u, NodeId v, double w) { edges.push_back({u, v, w}); });
  return edges;
}

ComponentResult largest_connected_component(const Graph& g) {
  const NodeId n = g.node_count();
  std::vector<NodeId> component(n, kInvalidNode);
  std::vector<std::size_t> sizes;
  std::vector<NodeId> stack;
  for (NodeId start = 0; start < n; ++start) {
    if (component[start] != kInvalidNode) continue;
    NodeId comp = static_cast<NodeId>(sizes.size());
    std::size_t size = 0;
    stack.push_back(start);
    component[start] = comp;
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      ++size;
      for (NodeId w : g.neighbors(v)) {
        if (component[w] == kInvalidNode) {
          component[w] = comp;
          stack.push_back(w);
        }
      }
    }
    sizes.push_back(size);
  }

  ComponentResult result;
  if (n == 0) return result;

  // Scanning in id order means the first maximal component also contains the
  // smallest minimum id, which settles ties.
  NodeId best = 0;
  for (NodeId c = 1; c < sizes.size(); ++c) {
    if (sizes[c] > sizes[best]) best = c;
  }

  std::vector<NodeId> new_id(n, kInvalidNode);
  for (NodeId v = 0; v < n; ++v) {
    if (component[v] == best) {
      new_id[v] = static_cast<NodeId>(result.original_ids.size());
      result.original_ids.push_back(v);
    }
  }

  std::vector<WeightedEdge> edges;
  g.for_each_edge([&](NodeId u, NodeId v, double w) {
    if (component[u] == best && component[v] == best) {
      edges.push_back({new_id[u], new_id[v], w});
    }
  });

  std::vector<std::string> ids;
  ids.reserve(result.original_ids.size());
  for (NodeId orig : result.original_ids) ids.push_back(g.external_id(orig));
  result.graph = Graph::from_edges(static_cast<NodeId>(result.original_ids.size()),
                                   std::move(edges), std::move(ids));
  return result;
}

}  // namespace harp
