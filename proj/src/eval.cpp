#include "harp/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace harp {

namespace {

double softplus(double x) {
  if (x > 0.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

double sigmoid_stable(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

struct BinaryFit {
  std::vector<double> w;
  double b = 0.0;
  std::vector<double> trace;
};

// Full-batch gradient descent with Armijo backtracking on
//   f(w, b) = mean_i softplus(-y_i (w.x_i + b)) + (l2 / (2m)) |w|^2
// The penalty is scaled by 1/m (liblinear's parameterization at C = 1/l2),
// so l2 = 1 matches the solver the classification protocol is built on.
BinaryFit fit_binary(const std::vector<std::span<const double>>& X,
                     const std::vector<double>& y_sign, double l2_raw,
                     std::size_t max_iter) {
  const std::size_t m = X.size();
  const std::size_t d = X.front().size();
  const double l2 = l2_raw / static_cast<double>(m);
  BinaryFit fit;
  fit.w.assign(d, 0.0);

  auto objective = [&](const std::vector<double>& w, double b) {
    double f = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      double zi = b;
      for (std::size_t c = 0; c < d; ++c) zi += w[c] * X[i][c];
      f += softplus(-y_sign[i] * zi);
    }
    f /= static_cast<double>(m);
    double reg = 0.0;
    for (double wc : w) reg += wc * wc;
    return f + 0.5 * l2 * reg;
  };

  double f_cur = objective(fit.w, fit.b);
  fit.trace.push_back(f_cur);
  std::vector<double> grad_w(d);
  std::vector<double> w_new(d);

  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    std::fill(grad_w.begin(), grad_w.end(), 0.0);
    double grad_b = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      double zi = fit.b;
      for (std::size_t c = 0; c < d; ++c) zi += fit.w[c] * X[i][c];
      if (!std::isfinite(zi)) throw std::runtime_error("logreg: non-finite score");
      // d/dz softplus(-y z) = -y * sigmoid(-y z)
      const double gz = -y_sign[i] * sigmoid_stable(-y_sign[i] * zi);
      for (std::size_t c = 0; c < d; ++c) grad_w[c] += gz * X[i][c];
      grad_b += gz;
    }
    double gnorm2 = 0.0;
    for (std::size_t c = 0; c < d; ++c) {
      grad_w[c] = grad_w[c] / static_cast<double>(m) + l2 * fit.w[c];
      gnorm2 += grad_w[c] * grad_w[c];
    }
    grad_b /= static_cast<double>(m);
    gnorm2 += grad_b * grad_b;
    if (std::sqrt(gnorm2) < 1e-6) break;

    double step = 1.0;
    const double c1 = 1e-4;
    bool accepted = false;
    for (int half = 0; half < 60; ++half) {
      for (std::size_t c = 0; c < d; ++c) w_new[c] = fit.w[c] - step * grad_w[c];
      const double b_new = fit.b - step * grad_b;
      const double f_new = objective(w_new, b_new);
      if (f_new <= f_cur - c1 * step * gnorm2) {
        fit.w = w_new;
        fit.b = b_new;
        f_cur = f_new;
        fit.trace.push_back(f_cur);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // step size underflow: we are at numerical optimum
  }
  return fit;
}

}  // namespace

SplitResult split_labeled(const LabelSet& labels, double ratio, Rng& rng) {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw std::invalid_argument("split: ratio must be in (0, 1)");
  }
  std::vector<NodeId> nodes = labels.labeled_nodes();
  if (nodes.size() < 2) {
    throw std::invalid_argument("split: need at least 2 labeled nodes");
  }
  rng.shuffle(nodes);
  std::size_t k = static_cast<std::size_t>(
      std::llround(ratio * static_cast<double>(nodes.size())));
  k = std::clamp<std::size_t>(k, 1, nodes.size() - 1);

  SplitResult out;
  out.train.assign(nodes.begin(), nodes.begin() + k);
  out.test.assign(nodes.begin() + k, nodes.end());
  return out;
}

double LogRegModel::score(std::uint32_t label, std::span<const double> x) const {
  double z = bias[label];
  const auto& w = weights[label];
  for (std::size_t c = 0; c < w.size(); ++c) z += w[c] * x[c];
  return z;
}

LogRegModel train_ovr_logreg(const EmbeddingMatrix& features,
                             std::span<const NodeId> rows, const LabelSet& labels,
                             double l2, std::size_t max_iter) {
  if (rows.empty()) throw std::invalid_argument("logreg: empty training set");
  for (NodeId v : rows) {
    for (double x : features.row(v)) {
      if (!std::isfinite(x)) throw std::invalid_argument("logreg: non-finite feature");
    }
  }

  LogRegModel model;
  model.dim = features.dim();
  model.label_count = labels.label_count;
  model.weights.assign(labels.label_count, std::vector<double>(features.dim(), 0.0));
  model.bias.assign(labels.label_count, 0.0);
  model.degenerate.assign(labels.label_count, 0);
  model.objective_trace.resize(labels.label_count);

  std::vector<std::span<const double>> X;
  X.reserve(rows.size());
  for (NodeId v : rows) X.push_back(features.row(v));

  std::vector<double> y_sign(rows.size());
  for (std::uint32_t label = 0; label < labels.label_count; ++label) {
    std::size_t positives = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const bool pos = labels.has_label(rows[i], label);
      y_sign[i] = pos ? 1.0 : -1.0;
      positives += pos;
    }
    if (positives == 0 || positives == rows.size()) {
      // Constant classifier at the (smoothed) prior.
      model.degenerate[label] = 1;
      const double p = (static_cast<double>(positives) + 1.0) /
                       (static_cast<double>(rows.size()) + 2.0);
      model.bias[label] = std::log(p / (1.0 - p));
      continue;
    }
    BinaryFit fit = fit_binary(X, y_sign, l2, max_iter);
    model.weights[label] = std::move(fit.w);
    model.bias[label] = fit.b;
    model.objective_trace[label] = std::move(fit.trace);
  }
  return model;
}

std::vector<std::vector<std::uint32_t>> predict_multilabel(
    const LogRegModel& model, const EmbeddingMatrix& features,
    std::span<const NodeId> rows, std::span<const std::size_t> k_per_node) {
  if (rows.size() != k_per_node.size()) {
    throw std::invalid_argument("predict: rows/k size mismatch");
  }
  std::vector<std::vector<std::uint32_t>> out(rows.size());
  std::vector<std::uint32_t> order(model.label_count);
  std::vector<double> scores(model.label_count);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t k = k_per_node[i];
    if (k > model.label_count) {
      throw std::invalid_argument("predict: k exceeds label count");
    }
    for (std::uint32_t l = 0; l < model.label_count; ++l) {
      scores[l] = model.score(l, features.row(rows[i]));
    }
    std::iota(order.begin(), order.end(), 0);
    std::partial_sort(order.begin(), order.begin() + k, order.end(),
                      [&](std::uint32_t a, std::uint32_t b) {
                        if (scores[a] != scores[b]) return scores[a] > scores[b];
                        return a < b;
                      });
    out[i].assign(order.begin(), order.begin() + k);
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

double macro_f1(const std::vector<std::vector<std::uint32_t>>& predicted,
                const std::vector<std::vector<std::uint32_t>>& truth,
                std::uint32_t label_count) {
  if (predicted.size() != truth.size()) {
    throw std::invalid_argument("macro_f1: size mismatch");
  }
  if (label_count == 0) return 0.0;
  std::vector<std::size_t> tp(label_count, 0), fp(label_count, 0), fn(label_count, 0);
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    for (std::uint32_t l : predicted[i]) {
      if (std::binary_search(truth[i].begin(), truth[i].end(), l)) {
        ++tp[l];
      } else {
        ++fp[l];
      }
    }
    for (std::uint32_t l : truth[i]) {
      if (!std::binary_search(predicted[i].begin(), predicted[i].end(), l)) ++fn[l];
    }
  }
  double sum = 0.0;
  for (std::uint32_t l = 0; l < label_count; ++l) {
    const double denom = static_cast<double>(2 * tp[l] + fp[l] + fn[l]);
    if (denom > 0.0) sum += 2.0 * static_cast<double>(tp[l]) / denom;
  }
  return sum / static_cast<double>(label_count);
}

EvaluationReport evaluate(const EmbeddingMatrix& embedding, const LabelSet& labels,
                          double ratio, std::size_t repetitions, std::uint64_t seed,
                          double l2) {
  if (embedding.rows() < labels.node_labels.size()) {
    throw std::invalid_argument("evaluate: embedding does not cover all labeled nodes");
  }
  const auto t0 = std::chrono::steady_clock::now();
  EvaluationReport report;
  report.ratio = ratio;
  report.seed = seed;

  Rng base(seed);
  for (std::size_t rep = 0; rep < repetitions; ++rep) {
    Rng rng = base.derive(rep);
    SplitResult split = split_labeled(labels, ratio, rng);
    LogRegModel model = train_ovr_logreg(embedding, split.train, labels, l2);

    std::vector<std::size_t> k(split.test.size());
    std::vector<std::vector<std::uint32_t>> truth(split.test.size());
    for (std::size_t i = 0; i < split.test.size(); ++i) {
      truth[i] = labels.node_labels[split.test[i]];
      k[i] = truth[i].size();
    }
    auto predicted = predict_multilabel(model, embedding, split.test, k);
    report.per_rep_f1.push_back(macro_f1(predicted, truth, labels.label_count));
  }
  report.mean_f1 = std::accumulate(report.per_rep_f1.begin(), report.per_rep_f1.end(), 0.0) /
                   static_cast<double>(repetitions);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

double relative_gain_percent(double baseline, double improved) {
  if (baseline == 0.0) return 0.0;
  return (improved - baseline) / baseline * 100.0;
}

std::vector<MethodComparison> compare_methods(
    const Graph& g, const LabelSet& labels, std::span<const EmbedMethod> methods,
    std::span<const double> ratios, const HarpConfig& base_cfg,
    std::size_t repetitions, std::uint64_t eval_seed, double l2) {
  std::vector<MethodComparison> out;
  for (EmbedMethod method : methods) {
    HarpConfig cfg = base_cfg;
    cfg.method = method;
    // The objective is definitional per method (deepwalk trains with
    // hierarchical softmax, line/node2vec with negative sampling).
    cfg.train.objective = default_train_config(method).objective;

    HarpResult harp = harp_embed(g, cfg);
    HarpResult flat = baseline_embed_matched(g, cfg);

    for (double ratio : ratios) {
      // Same eval seed: repetition r uses identical splits for both sides.
      EvaluationReport harp_rep = evaluate(harp.embedding, labels, ratio, repetitions, eval_seed, l2);
      EvaluationReport flat_rep = evaluate(flat.embedding, labels, ratio, repetitions, eval_seed, l2);

      MethodComparison row;
      row.method = method_name(method);
      row.ratio = ratio;
      row.baseline_mean = flat_rep.mean_f1;
      row.harp_mean = harp_rep.mean_f1;
      row.gain_percent = relative_gain_percent(flat_rep.mean_f1, harp_rep.mean_f1);
      row.p_value = paired_t_test(harp_rep.per_rep_f1, flat_rep.per_rep_f1).p;
      row.baseline_reps = flat_rep.per_rep_f1;
      row.harp_reps = harp_rep.per_rep_f1;
      out.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace harp
