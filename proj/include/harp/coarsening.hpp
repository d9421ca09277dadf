#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "harp/graph.hpp"
#include "harp/rng.hpp"

namespace harp {

// One coarsening step: the smaller graph plus, for every fine node, the
// coarse node it maps to. Merges are pairwise, so every coarse node has one
// or two preimages.
struct CoarsenStep {
  Graph graph;
  std::vector<NodeId> parent;  // fine id -> coarse id, total
};

// Contracts a maximal matching: edges are scanned in rng-shuffled order and
// an edge is matched when both endpoints are still free. Matched pairs merge
// into supernodes, unmatched nodes carry over as singletons. Merged
// adjacency sums weights; edges internal to a supernode disappear.
CoarsenStep edge_collapse(const Graph& g, Rng& rng);

// Compresses star shapes: hubs are visited in decreasing-degree order (ties
// by id); each hub's still-free neighbors are paired up in shuffled order
// (odd one left out) and the pairs merge. A node merges at most once per
// call, and a node that has already acted as a hub is never merged.
CoarsenStep star_collapse(const Graph& g, Rng& rng);

struct CoarseningHierarchy {
  std::vector<Graph> graphs;                     // G_0 .. G_L, G_0 = input
  std::vector<std::vector<NodeId>> parent_maps;  // level i: G_i -> G_{i+1}

  std::size_t levels() const { return graphs.size(); }

  // G_0 node -> its coarsest supernode.
  std::vector<NodeId> compose_to_coarsest() const;
};

// Repeats star-then-edge collapse (the two parent maps composed into one
// level) while the current graph still has >= threshold nodes, the step
// makes progress, and fewer than max_levels levels exist.
CoarseningHierarchy coarsen_hierarchy(const Graph& g, std::size_t threshold,
                                      std::size_t max_levels, Rng& rng);

inline CoarseningHierarchy coarsen_hierarchy(const Graph& g, Rng& rng) {
  return coarsen_hierarchy(g, 100, 32, rng);
}

// Writes level_<i>.edgelist for every level and parents_<i>.tsv
// (fine_id <TAB> coarse_id, one fine node per line) for every step.
void save_hierarchy(const CoarseningHierarchy& h, const std::string& dir);

}  // namespace harp
