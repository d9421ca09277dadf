#include <cmath>

#include "doctest.h"
#include "harp/graph_io.hpp"
#include "harp/line.hpp"
#include "harp/synthetic.hpp"

using namespace harp;

TEST_CASE("line: rejects edgeless graphs") {
  Graph g = Graph::from_edges(3, {});
  TrainConfig cfg;
  CHECK_THROWS_AS(train_line_first_order(g, nullptr, cfg), std::invalid_argument);
}

TEST_CASE("line: single edge converges towards sigma = 1") {
  Graph g = parse_edge_list("a b").graph;
  TrainConfig cfg;
  cfg.dim = 8;
  cfg.seed = 5;
  cfg.line_iterations = 20000;  // samples = r * |E| = 20000
  auto result = train_line_first_order(g, nullptr, cfg);
  double z = 0.0;
  for (std::size_t c = 0; c < cfg.dim; ++c) {
    z += result.embedding.row(0)[c] * result.embedding.row(1)[c];
  }
  CHECK(sigmoid(z) > 0.9);
}

TEST_CASE("line: sample accounting is exact") {
  Rng gen(6);
  Graph g = generate_erdos_renyi(60, 5.0, gen);
  TrainConfig cfg;
  cfg.dim = 4;
  cfg.line_iterations = 7;
  auto result = train_line_first_order(g, nullptr, cfg);
  CHECK(result.edge_samples == 7ull * g.edge_count());
}

TEST_CASE("line: deterministic single-threaded") {
  Rng gen(7);
  Graph g = generate_erdos_renyi(50, 5.0, gen);
  TrainConfig cfg;
  cfg.dim = 6;
  cfg.line_iterations = 10;
  cfg.seed = 8;
  auto r1 = train_line_first_order(g, nullptr, cfg);
  auto r2 = train_line_first_order(g, nullptr, cfg);
  CHECK(r1.embedding == r2.embedding);
}

TEST_CASE("line: warm start is honored and shape-checked") {
  Rng gen(9);
  Graph g = generate_erdos_renyi(30, 4.0, gen);
  TrainConfig cfg;
  cfg.dim = 4;
  cfg.line_iterations = 2;
  cfg.lr_start = cfg.lr_end = 0.0;
  Rng irng(10);
  EmbeddingMatrix init = EmbeddingMatrix::random_init(g.node_count(), 4, irng);
  auto result = train_line_first_order(g, &init, cfg);
  CHECK(result.embedding == init);  // zero lr leaves the warm start untouched

  EmbeddingMatrix wrong(3, 4);
  CHECK_THROWS_AS(train_line_first_order(g, &wrong, cfg), std::invalid_argument);
}

TEST_CASE("line: separates two cliques") {
  std::vector<WeightedEdge> edges;
  for (NodeId a = 0; a < 6; ++a) {
    for (NodeId b = a + 1; b < 6; ++b) {
      edges.push_back({a, b, 1.0});
      edges.push_back({static_cast<NodeId>(a + 6), static_cast<NodeId>(b + 6), 1.0});
    }
  }
  edges.push_back({0, 6, 1.0});  // weak bridge keeps the noise table balanced
  Graph g = Graph::from_edges(12, edges);

  TrainConfig cfg;
  cfg.dim = 4;
  cfg.line_iterations = 400;
  cfg.seed = 11;
  auto result = train_line_first_order(g, nullptr, cfg);
  REQUIRE(result.embedding.all_finite());

  auto dot = [&](NodeId a, NodeId b) {
    double s = 0.0;
    for (std::size_t c = 0; c < cfg.dim; ++c) {
      s += result.embedding.row(a)[c] * result.embedding.row(b)[c];
    }
    return s;
  };
  double intra = 0.0, inter = 0.0;
  int n_intra = 0, n_inter = 0;
  for (NodeId a = 0; a < 12; ++a) {
    for (NodeId b = a + 1; b < 12; ++b) {
      if ((a < 6) == (b < 6)) {
        intra += dot(a, b);
        ++n_intra;
      } else {
        inter += dot(a, b);
        ++n_inter;
      }
    }
  }
  CHECK(intra / n_intra > inter / n_inter);
}
