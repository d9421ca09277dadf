#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "harp/pipeline.hpp"

namespace harp {

struct BenchRecord {
  std::string graph_spec;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::string method;
  std::string mode;  // "baseline" or "harp"
  std::size_t levels = 1;
  std::uint64_t samples = 0;
  PhaseTimings timings;
};

// For each node count: generate an Erdos-Renyi graph at the given average
// degree, run the pipeline and the budget-matched flat baseline, and record
// phase timings. A warm-up run on the smallest graph is executed first and
// not recorded.
std::vector<BenchRecord> run_scaling_bench(std::span<const std::size_t> node_counts,
                                           double avg_degree, const HarpConfig& cfg);

void write_bench_csv(std::span<const BenchRecord> records, std::ostream& out);

}  // namespace harp
