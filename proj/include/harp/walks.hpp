#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "harp/graph.hpp"
#include "harp/rng.hpp"

namespace harp {

// Flat storage for a batch of random walks.
struct WalkCorpus {
  std::vector<NodeId> data;
  std::vector<std::size_t> offsets;  // walk i is data[offsets[i], offsets[i+1])
  std::uint32_t walks_per_node = 0;
  std::uint32_t walk_length = 0;

  std::size_t walk_count() const { return offsets.empty() ? 0 : offsets.size() - 1; }
  std::span<const NodeId> walk(std::size_t i) const {
    return {data.data() + offsets[i], offsets[i + 1] - offsets[i]};
  }
  // Total nodes visited; this is the sample count walk-based budgets use.
  std::size_t total_positions() const { return data.size(); }
};

// Index into `weights` drawn proportionally to weight; consumes exactly one
// rng draw. `total` must be the left-to-right sum of `weights`.
std::size_t pick_by_weight(std::span<const double> weights, double total, Rng& rng);

// One second-order step: from `cur` with predecessor `prev` (kInvalidNode on
// the first step), next is drawn with unnormalized weight
//   w(cur, x) * (1/p if x == prev; 1 if x adjacent to prev; 1/q otherwise).
// With p = q = 1 this reduces to plain weight-proportional sampling and
// takes the identical draw path. Returns kInvalidNode at a dead end.
NodeId biased_step(const Graph& g, NodeId prev, NodeId cur, double p, double q,
                   std::vector<double>& scratch, Rng& rng);

// gamma walks of length t from every node (node order shuffled per pass),
// with the next node drawn among neighbors proportionally to edge weight.
// Walks stop early only at nodes without neighbors.
WalkCorpus random_walks(const Graph& g, std::uint32_t gamma, std::uint32_t t, Rng& rng);

// Same schedule with second-order (p, q) bias. p = q = 1 reproduces
// random_walks draw for draw under the same seed.
WalkCorpus node2vec_walks(const Graph& g, std::uint32_t gamma, std::uint32_t t,
                          double p, double q, Rng& rng);

}  // namespace harp
