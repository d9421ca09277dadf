#include "harp/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "harp/svg.hpp"

namespace harp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

}  // namespace

const char* method_name(EmbedMethod m) {
  switch (m) {
    case EmbedMethod::deepwalk: return "deepwalk";
    case EmbedMethod::line: return "line";
    case EmbedMethod::node2vec: return "node2vec";
  }
  return "?";
}

EmbedMethod method_from_name(const std::string& name) {
  if (name == "deepwalk") return EmbedMethod::deepwalk;
  if (name == "line") return EmbedMethod::line;
  if (name == "node2vec") return EmbedMethod::node2vec;
  throw std::invalid_argument("unknown method '" + name + "'");
}

TrainConfig default_train_config(EmbedMethod method) {
  TrainConfig cfg;
  switch (method) {
    case EmbedMethod::deepwalk:
      cfg.objective = Objective::hierarchical_softmax;
      break;
    case EmbedMethod::node2vec:
      cfg.objective = Objective::negative_sampling;
      break;
    case EmbedMethod::line:
      cfg.dim = 64;
      cfg.objective = Objective::negative_sampling;
      break;
  }
  return cfg;
}

std::uint64_t level_seed(std::uint64_t master, std::size_t level, std::uint32_t role) {
  return splitmix64(master ^ splitmix64((static_cast<std::uint64_t>(role) << 32) |
                                        static_cast<std::uint64_t>(level)));
}

SampleBudget compute_sample_budget(const CoarseningHierarchy& h, const HarpConfig& cfg) {
  SampleBudget budget;
  for (const Graph& g : h.graphs) {
    std::uint64_t s;
    if (cfg.method == EmbedMethod::line) {
      s = static_cast<std::uint64_t>(cfg.train.line_iterations) * g.edge_count();
    } else {
      s = static_cast<std::uint64_t>(cfg.train.walks_per_node) * g.node_count() *
          cfg.train.walk_length;
    }
    budget.per_level.push_back(s);
    budget.total += s;
  }
  const Graph& g0 = h.graphs.front();
  if (cfg.method == EmbedMethod::line) {
    budget.baseline_equivalent = ceil_div(budget.total, g0.edge_count());
  } else {
    budget.baseline_equivalent =
        ceil_div(budget.total, static_cast<std::uint64_t>(g0.node_count()) * cfg.train.walk_length);
  }
  return budget;
}

EmbeddingMatrix prolongate(const EmbeddingMatrix& coarse,
                           std::span<const NodeId> parent_map) {
  EmbeddingMatrix fine(parent_map.size(), coarse.dim());
  for (std::size_t v = 0; v < parent_map.size(); ++v) {
    if (parent_map[v] >= coarse.rows()) {
      throw std::out_of_range("prolongate: parent id out of range");
    }
    auto src = coarse.row(parent_map[v]);
    auto dst = fine.row(v);
    std::copy(src.begin(), src.end(), dst.begin());
  }
  return fine;
}

namespace {

// One level's embedding pass: walks (if needed) + training, with the
// level-specific seed streams and instrumentation.
EmbeddingMatrix embed_level(const Graph& g, const HarpConfig& cfg, std::size_t level,
                            std::uint64_t walk_or_iter_count,
                            const EmbeddingMatrix* init, HarpStats& stats) {
  TrainConfig train = cfg.train;
  train.seed = level_seed(cfg.seed, level, kRoleTrain);

  if (cfg.method == EmbedMethod::line) {
    auto t0 = Clock::now();
    LineResult r = train_line_first_order(g, init, train, walk_or_iter_count);
    stats.timings.train_seconds += seconds_since(t0);
    stats.samples_per_level.push_back(r.edge_samples);
    return std::move(r.embedding);
  }

  Rng walk_rng(level_seed(cfg.seed, level, kRoleWalk));
  auto t0 = Clock::now();
  WalkCorpus corpus =
      cfg.method == EmbedMethod::node2vec
          ? node2vec_walks(g, static_cast<std::uint32_t>(walk_or_iter_count),
                           train.walk_length, train.p, train.q, walk_rng)
          : random_walks(g, static_cast<std::uint32_t>(walk_or_iter_count),
                         train.walk_length, walk_rng);
  stats.timings.walk_seconds += seconds_since(t0);

  t0 = Clock::now();
  SkipgramResult r = train_skipgram(corpus, g, init, train);
  stats.timings.train_seconds += seconds_since(t0);
  stats.samples_per_level.push_back(r.stats.positions);
  return std::move(r.embedding);
}

}  // namespace

HarpResult harp_embed(const Graph& g, const HarpConfig& cfg, const LevelCallback& on_level) {
  if (g.node_count() == 0) throw std::invalid_argument("harp: empty graph");
  cfg.train.validate();

  HarpResult out;
  auto run_start = Clock::now();

  Rng coarsen_rng(level_seed(cfg.seed, 0, kRoleHierarchy));
  auto t0 = Clock::now();
  CoarseningHierarchy h = coarsen_hierarchy(g, cfg.coarsen_threshold, cfg.max_levels, coarsen_rng);
  out.stats.timings.coarsen_seconds = seconds_since(t0);
  out.stats.levels = h.levels();

  const std::size_t last = h.levels() - 1;
  EmbeddingMatrix phi;
  for (std::size_t idx = 0; idx <= last; ++idx) {
    const std::size_t level = last - idx;  // coarsest first
    const Graph& gl = h.graphs[level];

    std::optional<EmbeddingMatrix> init;
    if (level != last) {
      auto tp = Clock::now();
      init = prolongate(phi, h.parent_maps[level]);
      out.stats.timings.prolong_seconds += seconds_since(tp);
    }

    const std::uint64_t units = cfg.method == EmbedMethod::line
                                    ? cfg.train.line_iterations
                                    : cfg.train.walks_per_node;
    phi = embed_level(gl, cfg, level, units, init ? &*init : nullptr, out.stats);
    if (on_level) on_level(level, gl, phi);
  }

  // samples_per_level was filled coarsest-first; store by level index.
  std::reverse(out.stats.samples_per_level.begin(), out.stats.samples_per_level.end());
  for (std::uint64_t s : out.stats.samples_per_level) out.stats.total_samples += s;

  out.stats.timings.total_seconds = seconds_since(run_start);
  out.embedding = std::move(phi);
  return out;
}

HarpResult baseline_embed(const Graph& g, const HarpConfig& cfg, std::uint64_t budget_units) {
  if (g.node_count() == 0) throw std::invalid_argument("baseline: empty graph");
  cfg.train.validate();

  HarpResult out;
  auto run_start = Clock::now();
  out.stats.levels = 1;
  EmbeddingMatrix phi = embed_level(g, cfg, 0, budget_units, nullptr, out.stats);
  out.stats.total_samples = out.stats.samples_per_level.front();
  out.stats.timings.total_seconds = seconds_since(run_start);
  out.embedding = std::move(phi);
  return out;
}

HarpResult baseline_embed_matched(const Graph& g, const HarpConfig& cfg) {
  Rng coarsen_rng(level_seed(cfg.seed, 0, kRoleHierarchy));
  CoarseningHierarchy h = coarsen_hierarchy(g, cfg.coarsen_threshold, cfg.max_levels, coarsen_rng);
  SampleBudget budget = compute_sample_budget(h, cfg);
  return baseline_embed(g, cfg, budget.baseline_equivalent);
}

void embed_levels_dump(const Graph& g, const HarpConfig& cfg, const std::string& out_dir) {
  if (cfg.train.dim != 2) {
    throw std::invalid_argument("dump-levels: requires dim = 2");
  }
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  harp_embed(g, cfg, [&](std::size_t level, const Graph& gl, const EmbeddingMatrix& phi) {
    const std::string base = out_dir + "/level_" + std::to_string(level);
    std::ofstream coords(base + ".coords");
    if (!coords) throw std::runtime_error("cannot write " + base + ".coords");
    char buf[64];
    for (NodeId v = 0; v < gl.node_count(); ++v) {
      std::snprintf(buf, sizeof(buf), " %.17g %.17g", phi.row(v)[0], phi.row(v)[1]);
      coords << gl.external_id(v) << buf << '\n';
    }
    write_layout_svg(gl, phi, base + ".svg");
  });
}

}  // namespace harp
