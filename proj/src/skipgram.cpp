#include "harp/skipgram.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace harp {

namespace {

// log(1 + exp(x)) without overflow
double softplus(double x) {
  if (x > 0.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void check_finite(double x, const char* where) {
  if (!std::isfinite(x)) {
    throw std::runtime_error(std::string("skipgram: non-finite score in ") + where +
                             " (training diverged; lower the learning rate)");
  }
}

thread_local std::vector<double> t_err;

}  // namespace

void TrainConfig::validate() const {
  if (dim == 0) throw std::invalid_argument("config: dim must be positive");
  if (walk_length == 0) throw std::invalid_argument("config: walk length must be positive");
  if (lr_start < lr_end || lr_end < 0.0) {
    throw std::invalid_argument("config: need lr_start >= lr_end >= 0");
  }
  if (p <= 0.0 || q <= 0.0) throw std::invalid_argument("config: p, q must be > 0");
  if (thread_count == 0) throw std::invalid_argument("config: thread_count must be >= 1");
}

AliasTable noise_distribution(const Graph& g) {
  std::vector<double> w(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    w[v] = std::pow(g.weighted_degree(v), 0.75);
  }
  return AliasTable(w);
}

double hs_pair_loss(std::span<const double> input,
                    const EmbeddingMatrix& node_vectors,
                    std::span<const std::uint32_t> path,
                    std::span<const std::uint8_t> code) {
  double loss = 0.0;
  for (std::size_t j = 0; j < path.size(); ++j) {
    const double z = dot(input, node_vectors.row(path[j]));
    const double sign = code[j] ? 1.0 : -1.0;
    loss += softplus(-sign * z);  // = -log sigmoid(sign * z)
  }
  return loss;
}

double hs_pair_update(std::span<double> input, EmbeddingMatrix& node_vectors,
                      std::span<const std::uint32_t> path,
                      std::span<const std::uint8_t> code, double lr) {
  const std::size_t d = input.size();
  t_err.assign(d, 0.0);
  double loss = 0.0;
  for (std::size_t j = 0; j < path.size(); ++j) {
    auto w = node_vectors.row(path[j]);
    const double z = dot(input, w);
    check_finite(z, "hierarchical softmax");
    const double sign = code[j] ? 1.0 : -1.0;
    loss += softplus(-sign * z);
    const double g = (static_cast<double>(code[j]) - sigmoid(z)) * lr;
    for (std::size_t c = 0; c < d; ++c) t_err[c] += g * w[c];
    for (std::size_t c = 0; c < d; ++c) w[c] += g * input[c];
  }
  for (std::size_t c = 0; c < d; ++c) input[c] += t_err[c];
  return loss;
}

double sgns_pair_loss(std::span<const double> input,
                      const EmbeddingMatrix& output_vectors,
                      std::span<const NodeId> targets,
                      std::span<const std::uint8_t> labels) {
  double loss = 0.0;
  for (std::size_t j = 0; j < targets.size(); ++j) {
    const double z = dot(input, output_vectors.row(targets[j]));
    const double sign = labels[j] ? 1.0 : -1.0;
    loss += softplus(-sign * z);
  }
  return loss;
}

double sgns_pair_update(std::span<double> input, EmbeddingMatrix& output_vectors,
                        std::span<const NodeId> targets,
                        std::span<const std::uint8_t> labels, double lr) {
  const std::size_t d = input.size();
  t_err.assign(d, 0.0);
  double loss = 0.0;
  for (std::size_t j = 0; j < targets.size(); ++j) {
    auto w = output_vectors.row(targets[j]);
    const double z = dot(input, w);
    check_finite(z, "negative sampling");
    const double sign = labels[j] ? 1.0 : -1.0;
    loss += softplus(-sign * z);
    const double g = (static_cast<double>(labels[j]) - sigmoid(z)) * lr;
    for (std::size_t c = 0; c < d; ++c) t_err[c] += g * w[c];
    for (std::size_t c = 0; c < d; ++c) w[c] += g * input[c];
  }
  for (std::size_t c = 0; c < d; ++c) input[c] += t_err[c];
  return loss;
}

double hs_leaf_probability(std::span<const double> input,
                           const EmbeddingMatrix& node_vectors,
                           const HuffmanTree& tree, NodeId leaf) {
  double p = 1.0;
  const auto& path = tree.paths[leaf];
  const auto& code = tree.codes[leaf];
  for (std::size_t j = 0; j < path.size(); ++j) {
    const double z = dot(input, node_vectors.row(path[j]));
    p *= code[j] ? sigmoid(z) : sigmoid(-z);
  }
  return p;
}

std::uint64_t count_window_pairs(const WalkCorpus& corpus, std::uint32_t window) {
  std::uint64_t pairs = 0;
  const std::uint64_t w = window;
  for (std::size_t i = 0; i < corpus.walk_count(); ++i) {
    const std::uint64_t len = corpus.walk(i).size();
    for (std::uint64_t pos = 0; pos < len; ++pos) {
      pairs += std::min(pos, w) + std::min(len - 1 - pos, w);
    }
  }
  return pairs;
}

double lr_at(std::uint64_t step, std::uint64_t total, double lr_start, double lr_end) {
  if (total <= 1) return lr_start;
  const double f = static_cast<double>(step) / static_cast<double>(total - 1);
  return std::max(lr_end, lr_start + (lr_end - lr_start) * f);
}

SkipgramResult train_skipgram(const WalkCorpus& corpus, const Graph& g,
                              const EmbeddingMatrix* init, const TrainConfig& cfg) {
  cfg.validate();
  if (cfg.window == 0) throw std::invalid_argument("skipgram: window must be >= 1");
  const NodeId n = g.node_count();
  if (init && (init->rows() != n || init->dim() != cfg.dim)) {
    throw std::invalid_argument("skipgram: warm-start shape mismatch");
  }

  Rng base(cfg.seed);
  EmbeddingMatrix phi = init ? *init : [&] {
    Rng init_rng = base.derive(0x696e6974);  // "init"
    return EmbeddingMatrix::random_init(n, cfg.dim, init_rng);
  }();

  const std::uint64_t total_pairs = count_window_pairs(corpus, cfg.window);

  HuffmanTree tree;
  EmbeddingMatrix aux;  // tree node vectors or output vectors, zero-initialized
  AliasTable noise;
  if (cfg.objective == Objective::hierarchical_softmax) {
    std::vector<std::uint64_t> freq(n, 0);
    for (NodeId v : corpus.data) ++freq[v];
    tree = build_huffman_tree(freq);
    aux = EmbeddingMatrix(tree.internal_count, cfg.dim);
  } else {
    aux = EmbeddingMatrix(n, cfg.dim);
    noise = noise_distribution(g);
  }

  std::atomic<std::uint64_t> pair_counter{0};

  auto worker = [&](std::size_t walk_lo, std::size_t walk_hi, Rng rng) {
    std::vector<NodeId> targets;
    std::vector<std::uint8_t> labels;
    for (std::size_t wi = walk_lo; wi < walk_hi; ++wi) {
      auto walk = corpus.walk(wi);
      for_each_window_pair(walk, cfg.window, [&](NodeId center, NodeId context) {
        const std::uint64_t s = pair_counter.fetch_add(1, std::memory_order_relaxed);
        const double lr = lr_at(s, total_pairs, cfg.lr_start, cfg.lr_end);
        if (cfg.objective == Objective::hierarchical_softmax) {
          hs_pair_update(phi.row(center), aux, tree.paths[context],
                         tree.codes[context], lr);
        } else {
          targets.assign(1, context);
          labels.assign(1, 1);
          for (std::uint32_t k = 0; k < cfg.negatives; ++k) {
            NodeId z = static_cast<NodeId>(noise.sample(rng));
            if (z == context) continue;
            targets.push_back(z);
            labels.push_back(0);
          }
          sgns_pair_update(phi.row(center), aux, targets, labels, lr);
        }
      });
    }
  };

  const std::size_t walks = corpus.walk_count();
  if (cfg.thread_count <= 1 || walks < 2 * cfg.thread_count) {
    worker(0, walks, base.derive(1000));
  } else {
    std::vector<std::thread> pool;
    const std::size_t per = (walks + cfg.thread_count - 1) / cfg.thread_count;
    for (std::uint32_t t = 0; t < cfg.thread_count; ++t) {
      const std::size_t lo = std::min(walks, t * per);
      const std::size_t hi = std::min(walks, lo + per);
      if (lo >= hi) break;
      pool.emplace_back(worker, lo, hi, base.derive(1000 + t));
    }
    for (auto& th : pool) th.join();
  }

  SkipgramResult result;
  result.embedding = std::move(phi);
  result.stats.pairs_trained = pair_counter.load();
  result.stats.positions = corpus.total_positions();
  return result;
}

}  // namespace harp
