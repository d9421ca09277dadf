#pragma once

#include "harp/embedding.hpp"
#include "harp/graph.hpp"
#include "harp/skipgram.hpp"

namespace harp {

struct LineResult {
  EmbeddingMatrix embedding;
  std::uint64_t edge_samples = 0;  // budget unit: r * |E|
};

// First-order edge-sampling trainer: line_iterations passes of |E| samples,
// edges drawn proportionally to weight through an alias table over both
// directions. Each sample takes a positive logistic step on the sampled
// endpoints plus `negatives` noise targets, on a single shared embedding
// matrix (both endpoints move). The iteration count can be overridden to
// give a flat baseline a scaled budget.
LineResult train_line_first_order(const Graph& g, const EmbeddingMatrix* init,
                                  const TrainConfig& cfg);
LineResult train_line_first_order(const Graph& g, const EmbeddingMatrix* init,
                                  const TrainConfig& cfg, std::uint64_t iterations);

}  // namespace harp
