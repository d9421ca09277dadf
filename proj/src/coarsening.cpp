#include "harp/coarsening.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "harp/graph_io.hpp"

namespace harp {

namespace {

// Builds the coarse graph given each node's merge partner (kInvalidNode for
// singletons). Coarse ids are assigned in ascending order of each group's
// smallest fine id.
CoarsenStep contract(const Graph& g, const std::vector<NodeId>& partner) {
  const NodeId n = g.node_count();
  CoarsenStep step;
  step.parent.assign(n, kInvalidNode);

  NodeId next = 0;
  for (NodeId v = 0; v < n; ++v) {
    if (step.parent[v] != kInvalidNode) continue;
    step.parent[v] = next;
    if (partner[v] != kInvalidNode) step.parent[partner[v]] = next;
    ++next;
  }

  std::vector<WeightedEdge> edges;
  edges.reserve(g.edge_count());
  g.for_each_edge([&](NodeId u, NodeId v, double w) {
    NodeId cu = step.parent[u];
    NodeId cv = step.parent[v];
    if (cu != cv) edges.push_back({cu, cv, w});
  });
  step.graph = Graph::from_edges(next, std::move(edges));
  return step;
}

}  // namespace

CoarsenStep edge_collapse(const Graph& g, Rng& rng) {
  std::vector<WeightedEdge> edges = g.edge_list();
  rng.shuffle(edges);

  std::vector<NodeId> partner(g.node_count(), kInvalidNode);
  for (const WeightedEdge& e : edges) {
    if (partner[e.u] == kInvalidNode && partner[e.v] == kInvalidNode) {
      partner[e.u] = e.v;
      partner[e.v] = e.u;
    }
  }
  return contract(g, partner);
}

CoarsenStep star_collapse(const Graph& g, Rng& rng) {
  const NodeId n = g.node_count();
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });

  std::vector<NodeId> partner(n, kInvalidNode);
  std::vector<bool> was_hub(n, false);
  std::vector<NodeId> candidates;
  for (NodeId hub : order) {
    if (partner[hub] != kInvalidNode) continue;
    was_hub[hub] = true;
    candidates.clear();
    for (NodeId nb : g.neighbors(hub)) {
      if (partner[nb] == kInvalidNode && !was_hub[nb]) candidates.push_back(nb);
    }
    if (candidates.size() < 2) continue;
    rng.shuffle(candidates);
    for (std::size_t i = 0; i + 1 < candidates.size(); i += 2) {
      partner[candidates[i]] = candidates[i + 1];
      partner[candidates[i + 1]] = candidates[i];
    }
  }
  return contract(g, partner);
}

std::vector<NodeId> CoarseningHierarchy::compose_to_coarsest() const {
  std::vector<NodeId> mapping(graphs.front().node_count());
  std::iota(mapping.begin(), mapping.end(), 0);
  for (const auto& pm : parent_maps) {
    for (NodeId& m : mapping) m = pm[m];
  }
  return mapping;
}

CoarseningHierarchy coarsen_hierarchy(const Graph& g, std::size_t threshold,
                                      std::size_t max_levels, Rng& rng) {
  CoarseningHierarchy h;
  h.graphs.push_back(g);
  while (h.graphs.back().node_count() >= threshold &&
         h.parent_maps.size() < max_levels) {
    const Graph& cur = h.graphs.back();
    CoarsenStep star = star_collapse(cur, rng);
    CoarsenStep edge = edge_collapse(star.graph, rng);
    if (edge.graph.node_count() >= cur.node_count()) break;  // no progress

    std::vector<NodeId> level(cur.node_count());
    for (NodeId v = 0; v < cur.node_count(); ++v) {
      level[v] = edge.parent[star.parent[v]];
    }
    h.parent_maps.push_back(std::move(level));
    h.graphs.push_back(std::move(edge.graph));
  }
  return h;
}

void save_hierarchy(const CoarseningHierarchy& h, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < h.graphs.size(); ++i) {
    save_edge_list(h.graphs[i], dir + "/level_" + std::to_string(i) + ".edgelist");
  }
  for (std::size_t i = 0; i < h.parent_maps.size(); ++i) {
    std::ofstream out(dir + "/parents_" + std::to_string(i) + ".tsv");
    if (!out) throw std::runtime_error("cannot write parents_" + std::to_string(i) + ".tsv");
    for (NodeId v = 0; v < h.parent_maps[i].size(); ++v) {
      out << v << '\t' << h.parent_maps[i][v] << '\n';
    }
  }
}

}  // namespace harp
