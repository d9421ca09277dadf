#include <algorithm>

#include "doctest.h"
#include "harp/graph.hpp"
#include "harp/synthetic.hpp"

using namespace harp;

TEST_CASE("erdos-renyi: single node is empty for any degree") {
  Rng rng(1);
  Graph g = generate_erdos_renyi(1, 5.0, rng);
  CHECK(g.node_count() == 1);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("erdos-renyi: parameter validation") {
  Rng rng(1);
  CHECK_THROWS_AS(generate_erdos_renyi(10, 10.0, rng), std::invalid_argument);
  CHECK_THROWS_AS(generate_erdos_renyi(10, -1.0, rng), std::invalid_argument);
}

TEST_CASE("erdos-renyi: same seed gives the identical graph") {
  Rng a(42), b(42), c(43);
  Graph g1 = generate_erdos_renyi(500, 8.0, a);
  Graph g2 = generate_erdos_renyi(500, 8.0, b);
  Graph g3 = generate_erdos_renyi(500, 8.0, c);
  CHECK(g1.edge_list().size() == g2.edge_list().size());
  auto e1 = g1.edge_list(), e2 = g2.edge_list();
  bool identical = e1.size() == e2.size();
  for (std::size_t i = 0; identical && i < e1.size(); ++i) {
    identical = e1[i].u == e2[i].u && e1[i].v == e2[i].v;
  }
  CHECK(identical);
  CHECK(g3.edge_count() != 0);  // different seed; almost surely different graph
}

TEST_CASE("erdos-renyi: mean degree lands near the target") {
  Rng rng(123);
  Graph g = generate_erdos_renyi(100, 10.0, rng);
  const double mean = 2.0 * static_cast<double>(g.edge_count()) / g.node_count();
  CHECK(mean >= 8.0);
  CHECK(mean <= 12.0);
}

TEST_CASE("erdos-renyi: edge count concentrates at n*d/2") {
  Rng rng(7);
  Graph g = generate_erdos_renyi(10000, 10.0, rng);
  CHECK(g.edge_count() >= 47500);
  CHECK(g.edge_count() <= 52500);
}

TEST_CASE("erdos-renyi: supercritical graph has a dominant component") {
  Rng rng(9);
  Graph g = generate_erdos_renyi(1000, 10.0, rng);
  auto lcc = largest_connected_component(g);
  CHECK(lcc.graph.node_count() > 990);
}

TEST_CASE("barabasi-albert: shape and heavy tail") {
  Rng rng(5);
  Graph g = generate_barabasi_albert(2000, 4, rng);
  CHECK(g.node_count() == 2000);
  // m edges per arriving node, minus any parallel duplicates (m=4 start)
  CHECK(g.edge_count() <= 4u * (2000 - 4));
  CHECK(g.edge_count() >= 4u * (2000 - 4) * 99 / 100);
  std::size_t max_degree = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) max_degree = std::max(max_degree, g.degree(v));
  const double avg = 2.0 * static_cast<double>(g.edge_count()) / g.node_count();
  CHECK(static_cast<double>(max_degree) > 8.0 * avg);
}

TEST_CASE("ring lattice and grid shapes") {
  Graph ring = make_ring_lattice(10, 2);
  CHECK(ring.node_count() == 10);
  CHECK(ring.edge_count() == 20);
  for (NodeId v = 0; v < 10; ++v) CHECK(ring.degree(v) == 4);

  Graph grid = make_grid(3, 4);
  CHECK(grid.node_count() == 12);
  CHECK(grid.edge_count() == 3 * 3 + 2 * 4);  // horizontal + vertical
  CHECK(grid.degree(0) == 2);
  CHECK(grid.degree(5) == 4);
}

TEST_CASE("planted partition: community structure and labels") {
  Rng rng(11);
  auto pp = generate_planted_partition(600, 6, 10.0, 0.2, rng);
  CHECK(pp.graph.node_count() == 600);
  CHECK(pp.labels.label_count == 6);
  CHECK(pp.labels.labeled_nodes().size() == 600);

  std::size_t intra = 0, inter = 0;
  pp.graph.for_each_edge([&](NodeId u, NodeId v, double) {
    if (pp.labels.node_labels[u] == pp.labels.node_labels[v]) {
      ++intra;
    } else {
      ++inter;
    }
  });
  const double frac_inter = static_cast<double>(inter) / static_cast<double>(intra + inter);
  CHECK(frac_inter > 0.1);
  CHECK(frac_inter < 0.3);
  const double mean_degree = 2.0 * static_cast<double>(pp.graph.edge_count()) / 600.0;
  CHECK(mean_degree > 8.0);
  CHECK(mean_degree < 12.0);
}
