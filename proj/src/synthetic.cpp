#include "harp/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace harp {

namespace {

// Visits each of `total` Bernoulli(p) trials that succeed, by geometric
// skips (Batagelj-Brandes), so sparse graphs cost O(edges) draws.
template <typename Fn>
void sample_bernoulli_indices(std::uint64_t total, double p, Rng& rng, Fn&& fn) {
  if (p <= 0.0 || total == 0) return;
  if (p >= 1.0) {
    for (std::uint64_t i = 0; i < total; ++i) fn(i);
    return;
  }
  const double log1mp = std::log1p(-p);
  double idx = -1.0;
  while (true) {
    double r = rng.real();
    idx += 1.0 + std::floor(std::log1p(-r) / log1mp);
    if (idx >= static_cast<double>(total)) break;
    fn(static_cast<std::uint64_t>(idx));
  }
}

}  // namespace

Graph generate_erdos_renyi(NodeId n, double avg_degree, Rng& rng) {
  if (n < 1) throw std::invalid_argument("erdos_renyi: n must be >= 1");
  if (avg_degree < 0.0) throw std::invalid_argument("erdos_renyi: avg_degree must be >= 0");
  if (n == 1) return Graph::from_edges(1, {});
  if (avg_degree >= static_cast<double>(n)) {
    throw std::invalid_argument("erdos_renyi: avg_degree must be < n");
  }

  const double p = std::min(1.0, avg_degree / static_cast<double>(n - 1));
  const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<std::size_t>(p * static_cast<double>(total) * 1.05) + 16);
  sample_bernoulli_indices(total, p, rng, [&](std::uint64_t idx) {
    // Pair index -> (u, v) with u < v: row u starts at u*n - u*(u+1)/2... use
    // the triangular inverse on the "v major" layout instead: idx counts pairs
    // (v, w) with w < v, row v holding v entries starting at v*(v-1)/2.
    NodeId v = static_cast<NodeId>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
    while (static_cast<std::uint64_t>(v) * (v + 1) / 2 <= idx) ++v;
    while (static_cast<std::uint64_t>(v) * (v - 1) / 2 > idx) --v;
    NodeId w = static_cast<NodeId>(idx - static_cast<std::uint64_t>(v) * (v - 1) / 2);
    edges.push_back({w, v, 1.0});
  });
  return Graph::from_edges(n, std::move(edges));
}

Graph generate_barabasi_albert(NodeId n, NodeId m, Rng& rng) {
  if (m < 1) throw std::invalid_argument("barabasi_albert: m must be >= 1");
  if (n <= m) throw std::invalid_argument("barabasi_albert: n must be > m");

  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<std::size_t>(n - m) * m);
  // Every edge endpoint appears once per incidence, so uniform draws from
  // this list are degree-proportional.
  std::vector<NodeId> endpoints;
  endpoints.reserve(edges.capacity() * 2);

  std::vector<NodeId> picked;
  for (NodeId v = m; v < n; ++v) {
    picked.clear();
    if (v == m) {
      for (NodeId t = 0; t < m; ++t) picked.push_back(t);
    } else {
      while (picked.size() < m) {
        NodeId t = endpoints[rng.index(endpoints.size())];
        if (std::find(picked.begin(), picked.end(), t) == picked.end()) {
          picked.push_back(t);
        }
      }
    }
    for (NodeId t : picked) {
      edges.push_back({v, t, 1.0});
      endpoints.push_back(v);
      endpoints.push_back(t);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph make_ring_lattice(NodeId n, NodeId k) {
  if (k < 1 || n <= 2 * k) throw std::invalid_argument("ring_lattice: need n > 2k, k >= 1");
  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<std::size_t>(n) * k);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId d = 1; d <= k; ++d) {
      edges.push_back({v, static_cast<NodeId>((v + d) % n), 1.0});
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph make_grid(NodeId rows, NodeId cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid: need rows, cols >= 1");
  std::vector<WeightedEdge> edges;
  auto id = [cols](NodeId r, NodeId c) { return r * cols + c; };
  for (NodeId r = 0; r < rows; ++r) {
    for (NodeId c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), 1.0});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), 1.0});
    }
  }
  return Graph::from_edges(rows * cols, std::move(edges));
}

PlantedPartition generate_planted_partition(NodeId n, std::uint32_t communities,
                                            double avg_degree, double mixing,
                                            Rng& rng) {
  if (communities < 1 || n < communities) {
    throw std::invalid_argument("planted_partition: need n >= communities >= 1");
  }
  if (mixing < 0.0 || mixing > 1.0) {
    throw std::invalid_argument("planted_partition: mixing must be in [0, 1]");
  }

  // Nodes [start_c, start_{c+1}) form community c; sizes differ by at most 1.
  std::vector<NodeId> start(communities + 1, 0);
  for (std::uint32_t c = 0; c < communities; ++c) {
    start[c + 1] = start[c] + n / communities + (c < n % communities ? 1 : 0);
  }

  const double size_in = static_cast<double>(n) / communities;
  const double p_in = size_in > 1.0
                          ? std::min(1.0, (1.0 - mixing) * avg_degree / (size_in - 1.0))
                          : 0.0;
  const double p_out = n > size_in
                           ? std::min(1.0, mixing * avg_degree / (static_cast<double>(n) - size_in))
                           : 0.0;

  std::vector<WeightedEdge> edges;
  for (std::uint32_t a = 0; a < communities; ++a) {
    const NodeId na = start[a + 1] - start[a];
    sample_bernoulli_indices(static_cast<std::uint64_t>(na) * (na - 1) / 2, p_in, rng,
                             [&](std::uint64_t idx) {
                               NodeId v = static_cast<NodeId>(
                                   (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
                               while (static_cast<std::uint64_t>(v) * (v + 1) / 2 <= idx) ++v;
                               while (static_cast<std::uint64_t>(v) * (v - 1) / 2 > idx) --v;
                               NodeId w = static_cast<NodeId>(
                                   idx - static_cast<std::uint64_t>(v) * (v - 1) / 2);
                               edges.push_back({start[a] + w, start[a] + v, 1.0});
                             });
    for (std::uint32_t b = a + 1; b < communities; ++b) {
      const NodeId nb = start[b + 1] - start[b];
      sample_bernoulli_indices(static_cast<std::uint64_t>(na) * nb, p_out, rng,
                               [&](std::uint64_t idx) {
                                 NodeId i = static_cast<NodeId>(idx / nb);
                                 NodeId j = static_cast<NodeId>(idx % nb);
                                 edges.push_back({start[a] + i, start[b] + j, 1.0});
                               });
    }
  }

  PlantedPartition out;
  out.graph = Graph::from_edges(n, std::move(edges));
  out.labels.node_labels.assign(n, {});
  out.labels.label_count = communities;
  for (std::uint32_t c = 0; c < communities; ++c) {
    out.labels.label_names.push_back(std::to_string(c));
    for (NodeId v = start[c]; v < start[c + 1]; ++v) {
      out.labels.node_labels[v] = {c};
    }
  }
  return out;
}

}  // namespace harp
