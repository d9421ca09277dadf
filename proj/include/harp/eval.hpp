#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "harp/embedding.hpp"
#include "harp/graph_io.hpp"
#include "harp/pipeline.hpp"
#include "harp/rng.hpp"
#include "harp/stats.hpp"

namespace harp {

struct SplitResult {
  std::vector<NodeId> train;
  std::vector<NodeId> test;
};

// Uniform split of the labeled nodes; train size round(ratio * n_labeled),
// clamped so both sides stay non-empty. Requires 0 < ratio < 1 and at least
// two labeled nodes.
SplitResult split_labeled(const LabelSet& labels, double ratio, Rng& rng);

struct LogRegModel {
  std::size_t dim = 0;
  std::uint32_t label_count = 0;
  std::vector<std::vector<double>> weights;  // per label
  std::vector<double> bias;                  // unregularized intercept
  std::vector<std::uint8_t> degenerate;      // label had no positives or no negatives
  std::vector<std::vector<double>> objective_trace;  // accepted line-search steps

  double score(std::uint32_t label, std::span<const double> x) const;
};

// One-vs-rest L2-regularized logistic regression by full-batch gradient
// descent with backtracking line search, run until the gradient norm falls
// below 1e-6 or max_iter steps. Deterministic. The objective per label is
//   mean logistic loss + (l2 / (2m)) |w|^2
// (liblinear's scaling with C = 1/l2; the intercept is not penalized).
// Labels with a single class get a constant prior classifier and a
// `degenerate` flag.
LogRegModel train_ovr_logreg(const EmbeddingMatrix& features,
                             std::span<const NodeId> rows, const LabelSet& labels,
                             double l2, std::size_t max_iter = 500);

// Top-k labels by score, k = the node's true label count; ties broken toward
// the smaller label id.
std::vector<std::vector<std::uint32_t>> predict_multilabel(
    const LogRegModel& model, const EmbeddingMatrix& features,
    std::span<const NodeId> rows, std::span<const std::size_t> k_per_node);

// Unweighted mean of per-label F1 over all label ids; a label with no
// support anywhere (TP = FP = FN = 0) contributes 0.
double macro_f1(const std::vector<std::vector<std::uint32_t>>& predicted,
                const std::vector<std::vector<std::uint32_t>>& truth,
                std::uint32_t label_count);

struct EvaluationReport {
  std::string method;
  double ratio = 0.0;
  std::vector<double> per_rep_f1;
  double mean_f1 = 0.0;
  std::uint64_t seed = 0;
  double seconds = 0.0;
};

// The classification protocol: `repetitions` rounds of split / fit / predict
// / macro-F1 with per-round derived seeds, then the mean.
EvaluationReport evaluate(const EmbeddingMatrix& embedding, const LabelSet& labels,
                          double ratio, std::size_t repetitions, std::uint64_t seed,
                          double l2 = 1.0);

struct MethodComparison {
  std::string method;
  double ratio = 0.0;
  double baseline_mean = 0.0;
  double harp_mean = 0.0;
  double gain_percent = 0.0;
  double p_value = 1.0;
  std::vector<double> baseline_reps;
  std::vector<double> harp_reps;
};

// (improved - baseline) / baseline, in percent; 0 when the baseline is 0.
double relative_gain_percent(double baseline, double improved);

// Runs each method flat and through the pipeline with matched sample
// budgets, evaluates both embeddings on identical splits, and reports the
// relative gain plus a paired t-test over the repetition pairs.
std::vector<MethodComparison> compare_methods(
    const Graph& g, const LabelSet& labels, std::span<const EmbedMethod> methods,
    std::span<const double> ratios, const HarpConfig& base_cfg,
    std::size_t repetitions, std::uint64_t eval_seed, double l2 = 1.0);

}  // namespace harp
