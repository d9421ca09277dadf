#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "harp/coarsening.hpp"
#include "harp/embedding.hpp"
#include "harp/graph.hpp"
#include "harp/line.hpp"
#include "harp/skipgram.hpp"

namespace harp {

enum class EmbedMethod { deepwalk, line, node2vec };

const char* method_name(EmbedMethod m);
EmbedMethod method_from_name(const std::string& name);

// Standard hyperparameters per method: deepwalk/node2vec use gamma=40,
// t=10, w=10, d=128 (hierarchical softmax for deepwalk, negative sampling
// for node2vec); line uses r=50, d=64. Learning rate 0.025 -> 0.001
// everywhere.
TrainConfig default_train_config(EmbedMethod method);

struct HarpConfig {
  EmbedMethod method = EmbedMethod::deepwalk;
  TrainConfig train;
  std::size_t coarsen_threshold = 100;
  std::size_t max_levels = 32;
  std::uint64_t seed = 1;
};

// Sample accounting in the method's native unit: walk positions
// (gamma * |V_i| * t) for walk methods, edge samples (r * |E_i|) for line.
struct SampleBudget {
  std::vector<std::uint64_t> per_level;  // index = level, 0 first
  std::uint64_t total = 0;
  // gamma (or r) for a flat baseline run consuming the same total, rounded up.
  std::uint64_t baseline_equivalent = 0;
};

SampleBudget compute_sample_budget(const CoarseningHierarchy& h, const HarpConfig& cfg);

// Copies each coarse row to all of its children.
EmbeddingMatrix prolongate(const EmbeddingMatrix& coarse,
                           std::span<const NodeId> parent_map);

struct PhaseTimings {
  double coarsen_seconds = 0.0;
  double walk_seconds = 0.0;
  double train_seconds = 0.0;
  double prolong_seconds = 0.0;
  double total_seconds = 0.0;
};

struct HarpStats {
  std::vector<std::uint64_t> samples_per_level;  // instrumented, native unit
  std::uint64_t total_samples = 0;
  std::size_t levels = 1;
  PhaseTimings timings;
};

struct HarpResult {
  EmbeddingMatrix embedding;
  HarpStats stats;
};

// Invoked after each level is trained, coarsest first.
using LevelCallback =
    std::function<void(std::size_t level, const Graph&, const EmbeddingMatrix&)>;

// Deterministic seed for the given level and role ("walk"/"train" streams);
// exposed so a flat run of the embedder can reproduce a degenerate
// single-level pipeline exactly.
std::uint64_t level_seed(std::uint64_t master, std::size_t level, std::uint32_t role);
inline constexpr std::uint32_t kRoleWalk = 1;
inline constexpr std::uint32_t kRoleTrain = 2;
inline constexpr std::uint32_t kRoleHierarchy = 0;

// The multilevel pipeline: coarsen, embed the coarsest graph from scratch,
// then prolongate + refine level by level down to the input graph. The
// learning-rate schedule restarts on every level.
HarpResult harp_embed(const Graph& g, const HarpConfig& cfg,
                      const LevelCallback& on_level = nullptr);

// Flat single-level run of the configured embedder with its walk count (or
// edge-iteration count) replaced by budget_units, e.g.
// compute_sample_budget(...).baseline_equivalent for a budget-matched
// baseline. Uses the level-0 seed streams.
HarpResult baseline_embed(const Graph& g, const HarpConfig& cfg,
                          std::uint64_t budget_units);

// Convenience: coarsen, compute the budget, and run the matched baseline.
HarpResult baseline_embed_matched(const Graph& g, const HarpConfig& cfg);

// d = 2 only: runs the pipeline and writes level_<i>.coords (id x y) and a
// scatter/edge SVG per level into out_dir.
void embed_levels_dump(const Graph& g, const HarpConfig& cfg,
                       const std::string& out_dir);

}  // namespace harp
