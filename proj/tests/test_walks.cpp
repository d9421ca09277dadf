#include <cmath>

#include "doctest.h"
#include "harp/graph_io.hpp"
#include "harp/synthetic.hpp"
#include "harp/walks.hpp"

using namespace harp;

TEST_CASE("walks: a single edge forces alternation") {
  Graph g = parse_edge_list("a b").graph;
  Rng rng(1);
  WalkCorpus c = random_walks(g, 1, 3, rng);
  REQUIRE(c.walk_count() == 2);
  for (std::size_t i = 0; i < c.walk_count(); ++i) {
    auto w = c.walk(i);
    REQUIRE(w.size() == 3);
    CHECK(w[0] == w[2]);
    CHECK(w[0] != w[1]);
  }
}

TEST_CASE("walks: isolated nodes yield gamma singleton walks") {
  Graph g = Graph::from_edges(3, {{0, 1, 1.0}});  // node 2 isolated
  Rng rng(2);
  WalkCorpus c = random_walks(g, 4, 5, rng);
  CHECK(c.walk_count() == 12);
  std::size_t singletons = 0;
  for (std::size_t i = 0; i < c.walk_count(); ++i) {
    auto w = c.walk(i);
    if (w.size() == 1) {
      ++singletons;
      CHECK(w[0] == 2);
    } else {
      CHECK(w.size() == 5);
    }
  }
  CHECK(singletons == 4);
}

TEST_CASE("walks: exactly gamma walks start at every node") {
  Rng gen(3);
  Graph g = generate_erdos_renyi(60, 5.0, gen);
  Rng rng(4);
  const std::uint32_t gamma = 7;
  WalkCorpus c = random_walks(g, gamma, 6, rng);
  std::vector<std::size_t> starts(g.node_count(), 0);
  for (std::size_t i = 0; i < c.walk_count(); ++i) ++starts[c.walk(i)[0]];
  for (std::size_t s : starts) CHECK(s == gamma);
}

TEST_CASE("walks: every consecutive pair is an edge") {
  Rng gen(5);
  Graph g = generate_erdos_renyi(80, 4.0, gen);
  Rng rng(6);
  WalkCorpus c = random_walks(g, 3, 8, rng);
  for (std::size_t i = 0; i < c.walk_count(); ++i) {
    auto w = c.walk(i);
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
      CHECK(g.has_edge(w[j], w[j + 1]));
    }
  }
}

TEST_CASE("walks: first step follows edge weights") {
  // hub h: leaf a weight 3, leaf b weight 1 -> P(a) = 3/4
  Graph g = parse_edge_list("h a 3\nh b 1").graph;
  Rng rng(7);
  int heavy = 0;
  const int trials = 10000;
  std::vector<double> scratch;
  for (int i = 0; i < trials; ++i) {
    NodeId next = biased_step(g, kInvalidNode, 0, 1.0, 1.0, scratch, rng);
    if (next == 1) ++heavy;
  }
  CHECK(std::abs(heavy / static_cast<double>(trials) - 0.75) < 0.02);
}

TEST_CASE("walks: node2vec with p=q=1 equals uniform walks draw for draw") {
  Rng gen(8);
  Graph g = generate_erdos_renyi(70, 6.0, gen);
  Rng r1(9), r2(9);
  WalkCorpus a = random_walks(g, 5, 10, r1);
  WalkCorpus b = node2vec_walks(g, 5, 10, 1.0, 1.0, r2);
  REQUIRE(a.walk_count() == b.walk_count());
  CHECK(a.data == b.data);
  CHECK(a.offsets == b.offsets);
}

TEST_CASE("node2vec step: triangle probabilities for p=q=2") {
  // prev=a, cur=b; return to a has bias 1/p, c is adjacent to a so bias 1
  // -> P(a) = (1/2) / (3/2) = 1/3, P(c) = 2/3
  Graph g = parse_edge_list("a b\nb c\nc a").graph;
  const NodeId a = 0, b = 1, c = 2;
  Rng rng(10);
  std::vector<double> scratch;
  int to_a = 0, to_c = 0;
  const int trials = 100000;
  for (int i = 0; i < trials; ++i) {
    NodeId next = biased_step(g, a, b, 2.0, 2.0, scratch, rng);
    if (next == a) ++to_a;
    if (next == c) ++to_c;
  }
  CHECK(std::abs(to_a / static_cast<double>(trials) - 1.0 / 3.0) < 0.01);
  CHECK(std::abs(to_c / static_cast<double>(trials) - 2.0 / 3.0) < 0.01);
}

TEST_CASE("node2vec step: path ratio P(forward)/P(back) = 2p at q=0.5") {
  Graph g = parse_edge_list("a b\nb c").graph;
  const NodeId a = 0, b = 1, c = 2;
  const double p = 2.0, q = 0.5;
  Rng rng(11);
  std::vector<double> scratch;
  int fwd = 0, back = 0;
  const int trials = 100000;
  for (int i = 0; i < trials; ++i) {
    NodeId next = biased_step(g, a, b, p, q, scratch, rng);
    if (next == c) ++fwd;
    if (next == a) ++back;
  }
  const double ratio = static_cast<double>(fwd) / static_cast<double>(back);
  CHECK(ratio == doctest::Approx(2.0 * p).epsilon(0.05));
}

TEST_CASE("walks: deterministic under the seed") {
  Rng gen(12);
  Graph g = generate_erdos_renyi(50, 5.0, gen);
  Rng r1(13), r2(13);
  WalkCorpus a = node2vec_walks(g, 2, 6, 0.5, 2.0, r1);
  WalkCorpus b = node2vec_walks(g, 2, 6, 0.5, 2.0, r2);
  CHECK(a.data == b.data);
}

TEST_CASE("walks: parameter validation") {
  Graph g = parse_edge_list("a b").graph;
  Rng rng(1);
  CHECK_THROWS_AS(random_walks(g, 1, 0, rng), std::invalid_argument);
  CHECK_THROWS_AS(node2vec_walks(g, 1, 3, 0.0, 1.0, rng), std::invalid_argument);
}
