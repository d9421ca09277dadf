#include "harp/walks.hpp"

#include <numeric>
#include <stdexcept>

namespace harp {

std::size_t pick_by_weight(std::span<const double> weights, double total, Rng& rng) {
  const double r = rng.real() * total;
  double cum = 0.0;
  const std::size_t last = weights.size() - 1;
  for (std::size_t i = 0; i < last; ++i) {
    cum += weights[i];
    if (r < cum) return i;
  }
  return last;  // also absorbs float rounding in `total`
}

NodeId biased_step(const Graph& g, NodeId prev, NodeId cur, double p, double q,
                   std::vector<double>& scratch, Rng& rng) {
  auto nbrs = g.neighbors(cur);
  if (nbrs.empty()) return kInvalidNode;
  auto w = g.weights(cur);

  if (prev == kInvalidNode || (p == 1.0 && q == 1.0)) {
    // First-order case. Multiplying by the all-ones bias would produce the
    // same weights, sums, and draws bit for bit, so skip it.
    return nbrs[pick_by_weight(w, g.weighted_degree(cur), rng)];
  }

  scratch.resize(nbrs.size());
  double total = 0.0;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    double bias;
    if (nbrs[i] == prev) {
      bias = 1.0 / p;
    } else if (g.has_edge(nbrs[i], prev)) {
      bias = 1.0;
    } else {
      bias = 1.0 / q;
    }
    scratch[i] = w[i] * bias;
    total += scratch[i];
  }
  return nbrs[pick_by_weight(scratch, total, rng)];
}

namespace {

WalkCorpus generate_walks(const Graph& g, std::uint32_t gamma, std::uint32_t t,
                          double p, double q, Rng& rng) {
  if (t < 1) throw std::invalid_argument("walks: walk length must be >= 1");
  if (p <= 0.0 || q <= 0.0) throw std::invalid_argument("walks: p, q must be > 0");

  const NodeId n = g.node_count();
  WalkCorpus corpus;
  corpus.walks_per_node = gamma;
  corpus.walk_length = t;
  corpus.data.reserve(static_cast<std::size_t>(n) * gamma * t);
  corpus.offsets.reserve(static_cast<std::size_t>(n) * gamma + 1);
  corpus.offsets.push_back(0);

  std::vector<NodeId> starts(n);
  std::iota(starts.begin(), starts.end(), 0);
  std::vector<double> scratch;

  for (std::uint32_t pass = 0; pass < gamma; ++pass) {
    rng.shuffle(starts);
    for (NodeId start : starts) {
      corpus.data.push_back(start);
      NodeId prev = kInvalidNode;
      NodeId cur = start;
      for (std::uint32_t step = 1; step < t; ++step) {
        NodeId next = biased_step(g, prev, cur, p, q, scratch, rng);
        if (next == kInvalidNode) break;
        corpus.data.push_back(next);
        prev = cur;
        cur = next;
      }
      corpus.offsets.push_back(corpus.data.size());
    }
  }
  return corpus;
}

}  // namespace

WalkCorpus random_walks(const Graph& g, std::uint32_t gamma, std::uint32_t t, Rng& rng) {
  return generate_walks(g, gamma, t, 1.0, 1.0, rng);
}

WalkCorpus node2vec_walks(const Graph& g, std::uint32_t gamma, std::uint32_t t,
                          double p, double q, Rng& rng) {
  return generate_walks(g, gamma, t, p, q, rng);
}

}  // namespace harp
