#pragma once

#include <cstdint>

#include "harp/graph.hpp"
#include "harp/graph_io.hpp"
#include "harp/rng.hpp"

namespace harp {

// G(n, p) with p = avg_degree / (n - 1), unit weights. Deterministic for a
// fixed rng seed. Requires avg_degree in [0, n); n = 1 always yields the
// single-node empty graph.
Graph generate_erdos_renyi(NodeId n, double avg_degree, Rng& rng);

// Preferential attachment: each new node attaches to m distinct existing
// nodes chosen proportionally to degree. n > m >= 1. Average degree ~ 2m.
Graph generate_barabasi_albert(NodeId n, NodeId m, Rng& rng);

// Cycle of n nodes where each node is also linked to its k nearest
// neighbors on each side (k >= 1, n > 2k).
Graph make_ring_lattice(NodeId n, NodeId k);

// rows x cols 4-neighbor lattice.
Graph make_grid(NodeId rows, NodeId cols);

struct PlantedPartition {
  Graph graph;
  LabelSet labels;  // one label per node: its community
};

// n nodes in `communities` equal-sized groups. Expected degree avg_degree,
// of which fraction `mixing` goes to other communities.
PlantedPartition generate_planted_partition(NodeId n, std::uint32_t communities,
                                            double avg_degree, double mixing,
                                            Rng& rng);

}  // namespace harp
