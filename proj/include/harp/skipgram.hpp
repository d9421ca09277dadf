#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "harp/alias.hpp"
#include "harp/embedding.hpp"
#include "harp/graph.hpp"
#include "harp/huffman.hpp"
#include "harp/rng.hpp"
#include "harp/walks.hpp"

namespace harp {

enum class Objective { hierarchical_softmax, negative_sampling };

struct TrainConfig {
  std::uint32_t dim = 128;
  std::uint32_t window = 10;          // w
  std::uint32_t walks_per_node = 40;  // gamma
  std::uint32_t walk_length = 10;     // t
  std::uint32_t line_iterations = 50; // r, passes over the edge set
  std::uint32_t negatives = 5;        // k
  double lr_start = 0.025;
  double lr_end = 0.001;
  Objective objective = Objective::hierarchical_softmax;
  double p = 1.0;  // node2vec return parameter
  double q = 1.0;  // node2vec in-out parameter
  std::uint64_t seed = 1;
  std::uint32_t thread_count = 1;

  void validate() const;  // throws std::invalid_argument
};

// Unigram noise distribution for negative sampling: node sampled
// proportionally to weighted_degree^0.75.
AliasTable noise_distribution(const Graph& g);

inline double sigmoid(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// --- pair-level primitives ---------------------------------------------
// The losses are plain functions of the parameters so tests can difference
// them; the updates apply exactly -lr * gradient of the matching loss.

// Hierarchical softmax over one (center, context) pair: logistic loss at
// each internal node on the context's root-to-leaf path.
double hs_pair_loss(std::span<const double> input,
                    const EmbeddingMatrix& node_vectors,
                    std::span<const std::uint32_t> path,
                    std::span<const std::uint8_t> code);
double hs_pair_update(std::span<double> input, EmbeddingMatrix& node_vectors,
                      std::span<const std::uint32_t> path,
                      std::span<const std::uint8_t> code, double lr);

// Logistic loss of `input` against explicit targets (labels 1 = observed,
// 0 = noise). Negative sampling and LINE both reduce to this.
double sgns_pair_loss(std::span<const double> input,
                      const EmbeddingMatrix& output_vectors,
                      std::span<const NodeId> targets,
                      std::span<const std::uint8_t> labels);
double sgns_pair_update(std::span<double> input, EmbeddingMatrix& output_vectors,
                        std::span<const NodeId> targets,
                        std::span<const std::uint8_t> labels, double lr);

// Probability of reaching `leaf` from `input` under the tree-factored
// softmax; sums to 1 over all leaves.
double hs_leaf_probability(std::span<const double> input,
                           const EmbeddingMatrix& node_vectors,
                           const HuffmanTree& tree, NodeId leaf);

// --- corpus-level training ----------------------------------------------

// Calls fn(center, context) for every ordered pair at distance <= window.
template <typename Fn>
void for_each_window_pair(std::span<const NodeId> walk, std::uint32_t window, Fn&& fn) {
  const std::size_t len = walk.size();
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t lo = i > window ? i - window : 0;
    const std::size_t hi = std::min(len, i + window + 1);
    for (std::size_t j = lo; j < hi; ++j) {
      if (j != i) fn(walk[i], walk[j]);
    }
  }
}

std::uint64_t count_window_pairs(const WalkCorpus& corpus, std::uint32_t window);

// Linear decay from lr_start at step 0 to lr_end at step total-1, clamped.
double lr_at(std::uint64_t step, std::uint64_t total, double lr_start, double lr_end);

struct TrainStats {
  std::uint64_t pairs_trained = 0;
  std::uint64_t positions = 0;  // walk positions consumed (budget unit)
};

struct SkipgramResult {
  EmbeddingMatrix embedding;
  TrainStats stats;
};

// Skip-gram SGD over the corpus. Rows start from `init` when given
// (warm start; shape must match), otherwise from the usual random
// initialization. Auxiliary parameters (tree node vectors or output vectors)
// always start at zero. Single-threaded runs are bit-reproducible; with
// more threads updates race benignly (hogwild).
SkipgramResult train_skipgram(const WalkCorpus& corpus, const Graph& g,
                              const EmbeddingMatrix* init, const TrainConfig& cfg);

}  // namespace harp
