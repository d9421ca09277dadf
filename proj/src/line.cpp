#include "harp/line.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "harp/alias.hpp"

namespace harp {

LineResult train_line_first_order(const Graph& g, const EmbeddingMatrix* init,
                                  const TrainConfig& cfg) {
  return train_line_first_order(g, init, cfg, cfg.line_iterations);
}

LineResult train_line_first_order(const Graph& g, const EmbeddingMatrix* init,
                                  const TrainConfig& cfg, std::uint64_t iterations) {
  cfg.validate();
  const NodeId n = g.node_count();
  const std::size_t m = g.edge_count();
  if (m == 0) throw std::invalid_argument("line: graph has no edges");
  if (init && (init->rows() != n || init->dim() != cfg.dim)) {
    throw std::invalid_argument("line: warm-start shape mismatch");
  }

  // Both directions of every edge, so a draw picks an ordered (u, v).
  std::vector<NodeId> src, dst;
  std::vector<double> weight;
  src.reserve(2 * m);
  dst.reserve(2 * m);
  weight.reserve(2 * m);
  g.for_each_edge([&](NodeId u, NodeId v, double w) {
    src.push_back(u);
    dst.push_back(v);
    weight.push_back(w);
    src.push_back(v);
    dst.push_back(u);
    weight.push_back(w);
  });
  const AliasTable edge_table(weight);
  const AliasTable noise = noise_distribution(g);

  Rng base(cfg.seed);
  EmbeddingMatrix phi = init ? *init : [&] {
    Rng init_rng = base.derive(0x696e6974);
    return EmbeddingMatrix::random_init(n, cfg.dim, init_rng);
  }();

  const std::uint64_t total = iterations * static_cast<std::uint64_t>(m);
  std::atomic<std::uint64_t> sample_counter{0};

  auto worker = [&](std::uint64_t count, Rng rng) {
    std::vector<NodeId> targets;
    std::vector<std::uint8_t> labels;
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::uint64_t s = sample_counter.fetch_add(1, std::memory_order_relaxed);
      const double lr = lr_at(s, total, cfg.lr_start, cfg.lr_end);
      const std::size_t e = edge_table.sample(rng);
      const NodeId u = src[e];
      const NodeId v = dst[e];
      targets.assign(1, v);
      labels.assign(1, 1);
      for (std::uint32_t k = 0; k < cfg.negatives; ++k) {
        NodeId z = static_cast<NodeId>(noise.sample(rng));
        // Both endpoints share one matrix here, so a noise draw hitting
        // either side of the positive pair is contradictory and skipped.
        if (z == v || z == u) continue;
        targets.push_back(z);
        labels.push_back(0);
      }
      sgns_pair_update(phi.row(u), phi, targets, labels, lr);
    }
  };

  if (cfg.thread_count <= 1 || total < 2 * cfg.thread_count) {
    worker(total, base.derive(2000));
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t per = total / cfg.thread_count;
    for (std::uint32_t t = 0; t < cfg.thread_count; ++t) {
      const std::uint64_t count = t + 1 == cfg.thread_count ? total - per * t : per;
      pool.emplace_back(worker, count, base.derive(2000 + t));
    }
    for (auto& th : pool) th.join();
  }

  LineResult result;
  result.embedding = std::move(phi);
  result.edge_samples = total;
  return result;
}

}  // namespace harp
