#include "harp/bench.hpp"

#include <algorithm>
#include <ostream>

#include "harp/synthetic.hpp"

namespace harp {

namespace {

BenchRecord record_from(const Graph& g, const std::string& spec, const HarpConfig& cfg,
                        const std::string& mode, const HarpResult& result) {
  BenchRecord rec;
  rec.graph_spec = spec;
  rec.nodes = g.node_count();
  rec.edges = g.edge_count();
  rec.method = method_name(cfg.method);
  rec.mode = mode;
  rec.levels = result.stats.levels;
  rec.samples = result.stats.total_samples;
  rec.timings = result.stats.timings;
  return rec;
}

}  // namespace

std::vector<BenchRecord> run_scaling_bench(std::span<const std::size_t> node_counts,
                                           double avg_degree, const HarpConfig& cfg) {
  std::vector<BenchRecord> records;
  if (node_counts.empty()) return records;

  // Warm-up on the smallest size: touches allocators and code paths once so
  // the recorded runs do not pay first-run costs.
  {
    Rng rng(splitmix64(cfg.seed ^ 0xbe9c));
    Graph g = generate_erdos_renyi(static_cast<NodeId>(node_counts.front()), avg_degree, rng);
    (void)harp_embed(g, cfg);
  }

  for (std::size_t n : node_counts) {
    Rng rng(splitmix64(cfg.seed ^ n));
    Graph g = generate_erdos_renyi(static_cast<NodeId>(n), avg_degree, rng);
    const std::string spec = "er:n=" + std::to_string(n) +
                             ",avg_degree=" + std::to_string(avg_degree);

    HarpResult harp = harp_embed(g, cfg);
    records.push_back(record_from(g, spec, cfg, "harp", harp));

    Rng crng(level_seed(cfg.seed, 0, kRoleHierarchy));
    CoarseningHierarchy h = coarsen_hierarchy(g, cfg.coarsen_threshold, cfg.max_levels, crng);
    SampleBudget budget = compute_sample_budget(h, cfg);
    HarpResult flat = baseline_embed(g, cfg, budget.baseline_equivalent);
    records.push_back(record_from(g, spec, cfg, "baseline", flat));
  }
  return records;
}

void write_bench_csv(std::span<const BenchRecord> records, std::ostream& out) {
  out << "graph,nodes,edges,method,mode,levels,samples,"
         "coarsen_s,walk_s,train_s,prolong_s,total_s\n";
  for (const BenchRecord& r : records) {
    out << r.graph_spec << ',' << r.nodes << ',' << r.edges << ',' << r.method << ','
        << r.mode << ',' << r.levels << ',' << r.samples << ',' << r.timings.coarsen_seconds
        << ',' << r.timings.walk_seconds << ',' << r.timings.train_seconds << ','
        << r.timings.prolong_seconds << ',' << r.timings.total_seconds << '\n';
  }
}

}  // namespace harp
