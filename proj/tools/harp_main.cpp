// Command-line front end: generate / coarsen / embed / eval / compare /
// bench / dump-levels. Every run with a fixed --seed (or HARP_SEED) is
// reproducible in single-threaded mode, and `embed` emits a JSON manifest
// that can replay the exact run via --from-manifest.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "harp/bench.hpp"
#include "harp/eval.hpp"
#include "harp/graph_io.hpp"
#include "harp/pipeline.hpp"
#include "harp/synthetic.hpp"

using json = nlohmann::json;
using namespace harp;

namespace {

constexpr const char* kVersion = "1.0.0";

std::uint64_t seed_fallback() {
  if (const char* env = std::getenv("HARP_SEED")) {
    return static_cast<std::uint64_t>(std::strtoull(env, nullptr, 10));
  }
  return 1;
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stod(tok));
  }
  if (out.empty()) throw CLI::ValidationError("expected a comma-separated list");
  return out;
}

std::vector<std::size_t> parse_size_list(const std::string& csv) {
  std::vector<std::size_t> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(static_cast<std::size_t>(std::stoull(tok)));
  }
  if (out.empty()) throw CLI::ValidationError("expected a comma-separated list");
  return out;
}

// Shared hyperparameter flags. Defaults: gamma=40, t=10, w=10, d=128 for
// the walk methods (d=64 and r=50 for line), p=q=1, lr 0.025 -> 0.001,
// coarsening threshold 100.
struct EmbedOptions {
  std::string method = "deepwalk";
  std::optional<std::uint32_t> dim;
  std::uint32_t walks_per_node = 40;
  std::uint32_t walk_length = 10;
  std::uint32_t window = 10;
  std::uint32_t line_iterations = 50;
  std::uint32_t negatives = 5;
  double p = 1.0, q = 1.0;
  double lr_start = 0.025, lr_end = 0.001;
  std::size_t threshold = 100;
  std::size_t max_levels = 32;
  std::uint32_t threads = 1;
  std::string objective;  // "", "hs", "neg"

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--method", method, "deepwalk | line | node2vec")
        ->check(CLI::IsMember({"deepwalk", "line", "node2vec"}));
    cmd->add_option("--dim", dim, "embedding dimension (128; 64 for line)");
    cmd->add_option("--walks", walks_per_node, "walks per node (gamma)");
    cmd->add_option("--walk-length", walk_length, "walk length (t)");
    cmd->add_option("--window", window, "skip-gram window (w)");
    cmd->add_option("--iterations", line_iterations, "line passes over the edges (r)");
    cmd->add_option("--negatives", negatives, "negative samples per pair (k)");
    cmd->add_option("--p", p, "node2vec return parameter");
    cmd->add_option("--q", q, "node2vec in-out parameter");
    cmd->add_option("--lr-start", lr_start, "initial learning rate");
    cmd->add_option("--lr-end", lr_end, "final learning rate");
    cmd->add_option("--threshold", threshold, "coarsening stops below this node count");
    cmd->add_option("--max-levels", max_levels, "coarsening level cap");
    cmd->add_option("--threads", threads, "training threads (1 = deterministic)");
    cmd->add_option("--objective", objective, "override: hs | neg")
        ->check(CLI::IsMember({"", "hs", "neg"}));
  }

  HarpConfig to_config(std::uint64_t seed) const {
    HarpConfig cfg;
    cfg.method = method_from_name(method);
    cfg.train = default_train_config(cfg.method);
    if (dim) cfg.train.dim = *dim;
    cfg.train.walks_per_node = walks_per_node;
    cfg.train.walk_length = walk_length;
    cfg.train.window = window;
    cfg.train.line_iterations = line_iterations;
    cfg.train.negatives = negatives;
    cfg.train.p = p;
    cfg.train.q = q;
    cfg.train.lr_start = lr_start;
    cfg.train.lr_end = lr_end;
    cfg.train.thread_count = threads;
    if (objective == "hs") cfg.train.objective = Objective::hierarchical_softmax;
    if (objective == "neg") cfg.train.objective = Objective::negative_sampling;
    cfg.coarsen_threshold = threshold;
    cfg.max_levels = max_levels;
    cfg.seed = seed;
    return cfg;
  }
};

json config_to_json(const HarpConfig& cfg, const std::string& mode) {
  return json{{"method", method_name(cfg.method)},
              {"mode", mode},
              {"dim", cfg.train.dim},
              {"walks_per_node", cfg.train.walks_per_node},
              {"walk_length", cfg.train.walk_length},
              {"window", cfg.train.window},
              {"line_iterations", cfg.train.line_iterations},
              {"negatives", cfg.train.negatives},
              {"p", cfg.train.p},
              {"q", cfg.train.q},
              {"lr_start", cfg.train.lr_start},
              {"lr_end", cfg.train.lr_end},
              {"objective", cfg.train.objective == Objective::hierarchical_softmax ? "hs" : "neg"},
              {"threads", cfg.train.thread_count},
              {"threshold", cfg.coarsen_threshold},
              {"max_levels", cfg.max_levels},
              {"seed", cfg.seed}};
}

HarpConfig config_from_json(const json& j) {
  HarpConfig cfg;
  cfg.method = method_from_name(j.at("method").get<std::string>());
  cfg.train = default_train_config(cfg.method);
  cfg.train.dim = j.at("dim").get<std::uint32_t>();
  cfg.train.walks_per_node = j.at("walks_per_node").get<std::uint32_t>();
  cfg.train.walk_length = j.at("walk_length").get<std::uint32_t>();
  cfg.train.window = j.at("window").get<std::uint32_t>();
  cfg.train.line_iterations = j.at("line_iterations").get<std::uint32_t>();
  cfg.train.negatives = j.at("negatives").get<std::uint32_t>();
  cfg.train.p = j.at("p").get<double>();
  cfg.train.q = j.at("q").get<double>();
  cfg.train.lr_start = j.at("lr_start").get<double>();
  cfg.train.lr_end = j.at("lr_end").get<double>();
  cfg.train.objective = j.at("objective").get<std::string>() == "hs"
                            ? Objective::hierarchical_softmax
                            : Objective::negative_sampling;
  cfg.train.thread_count = j.at("threads").get<std::uint32_t>();
  cfg.coarsen_threshold = j.at("threshold").get<std::size_t>();
  cfg.max_levels = j.at("max_levels").get<std::size_t>();
  cfg.seed = j.at("seed").get<std::uint64_t>();
  return cfg;
}

int cmd_generate(const std::string& model, std::size_t nodes, double avg_degree,
                 std::size_t ba_m, std::size_t ring_k, std::size_t grid_rows,
                 std::size_t grid_cols, std::uint32_t communities, double mixing,
                 std::uint64_t seed, const std::string& output,
                 const std::string& labels_output) {
  Rng rng(seed);
  Graph g;
  std::optional<LabelSet> labels;
  if (model == "er") {
    g = generate_erdos_renyi(static_cast<NodeId>(nodes), avg_degree, rng);
  } else if (model == "ba") {
    g = generate_barabasi_albert(static_cast<NodeId>(nodes), static_cast<NodeId>(ba_m), rng);
  } else if (model == "ring") {
    g = make_ring_lattice(static_cast<NodeId>(nodes), static_cast<NodeId>(ring_k));
  } else if (model == "grid") {
    g = make_grid(static_cast<NodeId>(grid_rows), static_cast<NodeId>(grid_cols));
  } else {  // planted
    auto pp = generate_planted_partition(static_cast<NodeId>(nodes), communities,
                                         avg_degree, mixing, rng);
    g = std::move(pp.graph);
    labels = std::move(pp.labels);
  }
  save_edge_list(g, output);
  if (!labels_output.empty()) {
    if (!labels) throw std::runtime_error("generate: only planted graphs carry labels");
    std::ofstream out(labels_output);
    if (!out) throw std::runtime_error("cannot open " + labels_output);
    // Isolated nodes cannot survive an edge-list round trip, so their label
    // lines would dangle; skip them.
    std::size_t skipped = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (g.degree(v) == 0) {
        ++skipped;
        continue;
      }
      out << g.external_id(v);
      for (auto l : labels->node_labels[v]) out << ' ' << labels->label_names[l];
      out << '\n';
    }
    if (skipped > 0) {
      std::cout << "note: " << skipped << " isolated node(s) left out of the label file\n";
    }
  }
  std::cout << "generated " << model << " graph: " << g.node_count() << " nodes, "
            << g.edge_count() << " edges -> " << output << "\n";
  return 0;
}

int cmd_coarsen(const std::string& input, std::size_t threshold, std::size_t max_levels,
                std::uint64_t seed, const std::string& out_dir,
                const std::string& stats_csv) {
  Graph g = load_edge_list(input).graph;
  auto lcc = largest_connected_component(g);
  if (lcc.graph.node_count() < g.node_count()) {
    std::cout << "largest connected component: " << lcc.graph.node_count() << " of "
              << g.node_count() << " nodes\n";
  }
  Rng rng(seed);
  auto h = coarsen_hierarchy(lcc.graph, threshold, max_levels, rng);
  if (!out_dir.empty()) save_hierarchy(h, out_dir);

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!stats_csv.empty()) {
    file.open(stats_csv);
    if (!file) throw std::runtime_error("cannot open " + stats_csv);
    out = &file;
  }
  const double n0 = static_cast<double>(h.graphs.front().node_count());
  const double e0 = static_cast<double>(std::max<std::size_t>(1, h.graphs.front().edge_count()));
  *out << "level,nodes,edges,node_ratio,edge_ratio\n";
  for (std::size_t i = 0; i < h.levels(); ++i) {
    *out << i << ',' << h.graphs[i].node_count() << ',' << h.graphs[i].edge_count() << ','
         << static_cast<double>(h.graphs[i].node_count()) / n0 << ','
         << static_cast<double>(h.graphs[i].edge_count()) / e0 << '\n';
  }
  return 0;
}

void write_eval_csv(const std::string& path, const std::vector<EvaluationReport>& reports) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "method,ratio,rep,macro_f1\n";
  for (const auto& rep : reports) {
    for (std::size_t i = 0; i < rep.per_rep_f1.size(); ++i) {
      out << rep.method << ',' << rep.ratio << ',' << i << ',' << rep.per_rep_f1[i] << '\n';
    }
  }
}

int cmd_embed(const std::string& input, const EmbedOptions& opts, const std::string& mode,
              std::uint64_t seed, const std::string& output, const std::string& dump_dir,
              const std::string& labels_path, const std::string& ratios_csv,
              std::size_t reps, const std::string& eval_out,
              std::string manifest_path, const std::string& from_manifest) {
  std::string graph_path = input;
  HarpConfig cfg;
  std::string run_mode = mode;
  std::string out_path = output;

  if (!from_manifest.empty()) {
    json m = json::parse(read_file(from_manifest));
    cfg = config_from_json(m.at("config"));
    graph_path = m.at("input").get<std::string>();
    run_mode = m.at("config").at("mode").get<std::string>();
    if (out_path.empty()) out_path = m.at("output").get<std::string>();
  } else {
    cfg = opts.to_config(seed);
  }
  if (out_path.empty()) throw std::runtime_error("embed: --output is required");

  Graph g = load_edge_list(graph_path).graph;

  HarpResult result;
  SampleBudget budget;
  {
    Rng crng(level_seed(cfg.seed, 0, kRoleHierarchy));
    auto h = coarsen_hierarchy(g, cfg.coarsen_threshold, cfg.max_levels, crng);
    budget = compute_sample_budget(h, cfg);
  }
  if (run_mode == "harp") {
    result = harp_embed(g, cfg);
  } else {
    result = baseline_embed(g, cfg, budget.baseline_equivalent);
  }
  save_embedding(result.embedding, g, out_path);

  if (!dump_dir.empty()) {
    if (cfg.train.dim != 2) throw std::runtime_error("--dump-levels requires --dim 2");
    embed_levels_dump(g, cfg, dump_dir);
  }

  json manifest{
      {"tool", "harp"},
      {"version", kVersion},
      {"command", "embed"},
      {"input", graph_path},
      {"output", out_path},
      {"config", config_to_json(cfg, run_mode)},
      {"budget",
       {{"per_level", budget.per_level},
        {"total", budget.total},
        {"baseline_equivalent", budget.baseline_equivalent}}},
      {"executed_samples", result.stats.total_samples},
      {"levels", result.stats.levels},
      {"timings",
       {{"coarsen_s", result.stats.timings.coarsen_seconds},
        {"walk_s", result.stats.timings.walk_seconds},
        {"train_s", result.stats.timings.train_seconds},
        {"prolong_s", result.stats.timings.prolong_seconds},
        {"total_s", result.stats.timings.total_seconds}}}};

  if (!labels_path.empty()) {
    LabelSet labels = load_labels(labels_path, g);
    std::vector<EvaluationReport> reports;
    for (double ratio : parse_double_list(ratios_csv)) {
      EvaluationReport rep = evaluate(result.embedding, labels, ratio, reps,
                                      splitmix64(cfg.seed ^ 0xe7a1));
      rep.method = std::string(method_name(cfg.method)) +
                   (run_mode == "harp" ? "+harp" : "");
      reports.push_back(std::move(rep));
      manifest["evaluation"].push_back({{"ratio", ratio}, {"mean_macro_f1", reports.back().mean_f1}});
      std::cout << rep.method << " ratio " << ratio << ": mean macro-F1 "
                << reports.back().mean_f1 << "\n";
    }
    if (!eval_out.empty()) write_eval_csv(eval_out, reports);
  }

  if (manifest_path.empty()) manifest_path = out_path + ".manifest.json";
  std::ofstream mf(manifest_path);
  if (!mf) throw std::runtime_error("cannot open " + manifest_path);
  mf << manifest.dump(2) << "\n";

  std::cout << "embedded " << g.node_count() << " nodes (" << run_mode << " "
            << method_name(cfg.method) << ", " << result.stats.levels << " level"
            << (result.stats.levels == 1 ? "" : "s") << ", " << result.stats.total_samples
            << " samples) -> " << out_path << "\n";
  return 0;
}

int cmd_eval(const std::string& embedding_path, const std::string& labels_path,
             const std::string& ratios_csv, std::size_t reps, std::uint64_t seed,
             double l2, const std::string& out_csv, const std::string& method_name_flag) {
  LoadedEmbedding loaded = load_embedding(embedding_path);
  LabelSet labels = parse_labels(read_file(labels_path), loaded.ids);
  std::vector<EvaluationReport> reports;
  for (double ratio : parse_double_list(ratios_csv)) {
    EvaluationReport rep = evaluate(loaded.matrix, labels, ratio, reps, seed, l2);
    rep.method = method_name_flag;
    std::cout << rep.method << " ratio " << ratio << ": mean macro-F1 " << rep.mean_f1
              << " (" << reps << " reps)\n";
    reports.push_back(std::move(rep));
  }
  if (!out_csv.empty()) write_eval_csv(out_csv, reports);
  return 0;
}

int cmd_compare(const std::string& input, const std::string& labels_path,
                const std::string& methods_csv, const std::string& ratios_csv,
                std::size_t reps, std::uint64_t seed, double l2, const EmbedOptions& opts,
                const std::string& out_csv, const std::string& curve_csv) {
  Graph g = load_edge_list(input).graph;
  LabelSet labels = load_labels(labels_path, g);

  std::vector<EmbedMethod> methods;
  {
    std::stringstream ss(methods_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (!tok.empty()) methods.push_back(method_from_name(tok));
    }
  }
  auto ratios = parse_double_list(ratios_csv);
  HarpConfig base = opts.to_config(seed);
  auto rows = compare_methods(g, labels, methods, ratios, base, reps,
                              splitmix64(seed ^ 0xe7a1), l2);

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_csv.empty()) {
    file.open(out_csv);
    if (!file) throw std::runtime_error("cannot open " + out_csv);
    out = &file;
  }
  *out << "method,ratio,baseline_mean,harp_mean,gain_percent,p_value\n";
  for (const auto& r : rows) {
    *out << r.method << ',' << r.ratio << ',' << r.baseline_mean << ',' << r.harp_mean
         << ',' << r.gain_percent << ',' << r.p_value << '\n';
  }
  if (!curve_csv.empty()) {
    std::ofstream curve(curve_csv);
    if (!curve) throw std::runtime_error("cannot open " + curve_csv);
    curve << "method,mode,ratio,mean_macro_f1\n";
    for (const auto& r : rows) {
      curve << r.method << ",baseline," << r.ratio << ',' << r.baseline_mean << '\n';
      curve << r.method << ",harp," << r.ratio << ',' << r.harp_mean << '\n';
    }
  }
  return 0;
}

int cmd_bench(const std::string& nodes_csv, double avg_degree, const EmbedOptions& opts,
              std::uint64_t seed, const std::string& out_csv) {
  auto nodes = parse_size_list(nodes_csv);
  if (!std::is_sorted(nodes.begin(), nodes.end())) {
    throw std::runtime_error("bench: node counts must be ascending");
  }
  HarpConfig cfg = opts.to_config(seed);
  auto records = run_scaling_bench(nodes, avg_degree, cfg);
  if (out_csv.empty()) {
    write_bench_csv(records, std::cout);
  } else {
    std::ofstream out(out_csv);
    if (!out) throw std::runtime_error("cannot open " + out_csv);
    write_bench_csv(records, out);
  }
  return 0;
}

int cmd_dump_levels(const std::string& input, const EmbedOptions& opts, std::uint64_t seed,
                    const std::string& out_dir) {
  Graph g = load_edge_list(input).graph;
  HarpConfig cfg = opts.to_config(seed);
  cfg.train.dim = 2;
  embed_levels_dump(g, cfg, out_dir);
  std::cout << "wrote per-level coordinates and SVGs to " << out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multilevel graph embedding toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = seed_fallback();

  // generate
  auto* gen = app.add_subcommand("generate", "write a synthetic graph as an edge list");
  std::string gen_model = "er", gen_output, gen_labels_output;
  std::size_t gen_nodes = 1000, gen_m = 8, gen_k = 2, gen_rows = 20, gen_cols = 20;
  double gen_avg_degree = 10.0, gen_mixing = 0.2;
  std::uint32_t gen_communities = 6;
  gen->add_option("--model", gen_model, "er | ba | ring | grid | planted")
      ->check(CLI::IsMember({"er", "ba", "ring", "grid", "planted"}));
  gen->add_option("--nodes", gen_nodes, "node count");
  gen->add_option("--avg-degree", gen_avg_degree, "er/planted average degree");
  gen->add_option("--m", gen_m, "ba attachments per node");
  gen->add_option("--k", gen_k, "ring neighbors per side");
  gen->add_option("--rows", gen_rows, "grid rows");
  gen->add_option("--cols", gen_cols, "grid cols");
  gen->add_option("--communities", gen_communities, "planted communities");
  gen->add_option("--mixing", gen_mixing, "planted inter-community fraction");
  gen->add_option("--seed", seed, "rng seed (or HARP_SEED)");
  gen->add_option("--output", gen_output, "edge list path")->required();
  gen->add_option("--labels-output", gen_labels_output, "planted labels path");

  // coarsen
  auto* coarsen = app.add_subcommand("coarsen", "build and export the coarsening hierarchy");
  std::string co_input, co_out_dir, co_stats;
  std::size_t co_threshold = 100, co_max_levels = 32;
  coarsen->add_option("--input", co_input, "edge list")->required();
  coarsen->add_option("--threshold", co_threshold, "stop below this node count");
  coarsen->add_option("--max-levels", co_max_levels, "level cap");
  coarsen->add_option("--seed", seed, "rng seed (or HARP_SEED)");
  coarsen->add_option("--out-dir", co_out_dir, "directory for level_<i>.edgelist + parents_<i>.tsv");
  coarsen->add_option("--stats-csv", co_stats, "per-level node/edge ratio CSV (default: stdout)");

  // embed
  auto* embed = app.add_subcommand("embed", "compute node embeddings");
  EmbedOptions embed_opts;
  std::string em_input, em_mode = "harp", em_output, em_dump, em_labels, em_ratios = "0.05";
  std::string em_eval_out, em_manifest, em_from_manifest;
  std::size_t em_reps = 10;
  embed->add_option("--input", em_input, "edge list");
  embed->add_option("--mode", em_mode, "harp | baseline (budget-matched flat run)")
      ->check(CLI::IsMember({"harp", "baseline"}));
  embed_opts.add_flags(embed);
  embed->add_option("--seed", seed, "rng seed (or HARP_SEED)");
  embed->add_option("--output", em_output, "embedding file");
  embed->add_option("--dump-levels", em_dump, "write per-level 2d coords + svg here");
  embed->add_option("--labels", em_labels, "evaluate after embedding with these labels");
  embed->add_option("--ratios", em_ratios, "labeled ratios for --labels");
  embed->add_option("--reps", em_reps, "evaluation repetitions");
  embed->add_option("--eval-out", em_eval_out, "evaluation CSV path");
  embed->add_option("--manifest", em_manifest, "manifest path (default <output>.manifest.json)");
  embed->add_option("--from-manifest", em_from_manifest, "replay a previous run");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "classification benchmark on a stored embedding");
  std::string ev_embedding, ev_labels, ev_ratios = "0.05", ev_out, ev_name = "embedding";
  std::size_t ev_reps = 10;
  double ev_l2 = 1.0;
  eval_cmd->add_option("--embedding", ev_embedding, "embedding file")->required();
  eval_cmd->add_option("--labels", ev_labels, "label file")->required();
  eval_cmd->add_option("--ratios", ev_ratios, "comma-separated labeled ratios");
  eval_cmd->add_option("--reps", ev_reps, "repetitions per ratio");
  eval_cmd->add_option("--seed", seed, "rng seed (or HARP_SEED)");
  eval_cmd->add_option("--l2", ev_l2, "logistic regression regularization");
  eval_cmd->add_option("--out", ev_out, "CSV: method,ratio,rep,macro_f1");
  eval_cmd->add_option("--method-name", ev_name, "method column value");

  // compare
  auto* compare = app.add_subcommand("compare", "baseline vs pipeline, matched budgets");
  EmbedOptions cmp_opts;
  std::string cm_input, cm_labels, cm_methods = "deepwalk,line,node2vec";
  std::string cm_ratios = "0.05", cm_out, cm_curve;
  std::size_t cm_reps = 10;
  double cm_l2 = 1.0;
  compare->add_option("--input", cm_input, "edge list")->required();
  compare->add_option("--labels", cm_labels, "label file")->required();
  compare->add_option("--methods", cm_methods, "comma-separated method list");
  compare->add_option("--ratios", cm_ratios, "comma-separated labeled ratios");
  compare->add_option("--reps", cm_reps, "repetitions per ratio");
  compare->add_option("--l2", cm_l2, "logistic regression regularization");
  cmp_opts.add_flags(compare);
  compare->add_option("--seed", seed, "rng seed (or HARP_SEED)");
  compare->add_option("--out", cm_out, "comparison table CSV (default: stdout)");
  compare->add_option("--curve-out", cm_curve, "per-ratio curve CSV");

  // bench
  auto* bench = app.add_subcommand("bench", "scaling benchmark on er graphs");
  EmbedOptions bench_opts;
  bench_opts.method = "line";
  std::string be_nodes = "100,1000,10000", be_out;
  double be_avg_degree = 10.0;
  bench->add_option("--node-counts", be_nodes, "ascending comma-separated node counts");
  bench->add_option("--avg-degree", be_avg_degree, "er average degree");
  bench_opts.add_flags(bench);
  bench->add_option("--seed", seed, "rng seed (or HARP_SEED)");
  bench->add_option("--out", be_out, "CSV path (default: stdout)");

  // dump-levels
  auto* dump = app.add_subcommand("dump-levels", "2d embed and dump every level");
  EmbedOptions dump_opts;
  dump_opts.method = "line";
  std::string du_input, du_out_dir = "levels";
  dump->add_option("--input", du_input, "edge list")->required();
  dump_opts.add_flags(dump);
  dump->add_option("--seed", seed, "rng seed (or HARP_SEED)");
  dump->add_option("--out-dir", du_out_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      return cmd_generate(gen_model, gen_nodes, gen_avg_degree, gen_m, gen_k, gen_rows,
                          gen_cols, gen_communities, gen_mixing, seed, gen_output,
                          gen_labels_output);
    }
    if (coarsen->parsed()) {
      return cmd_coarsen(co_input, co_threshold, co_max_levels, seed, co_out_dir, co_stats);
    }
    if (embed->parsed()) {
      if (em_input.empty() && em_from_manifest.empty()) {
        throw std::runtime_error("embed: need --input or --from-manifest");
      }
      return cmd_embed(em_input, embed_opts, em_mode, seed, em_output, em_dump, em_labels,
                       em_ratios, em_reps, em_eval_out, em_manifest, em_from_manifest);
    }
    if (eval_cmd->parsed()) {
      return cmd_eval(ev_embedding, ev_labels, ev_ratios, ev_reps, seed, ev_l2, ev_out, ev_name);
    }
    if (compare->parsed()) {
      return cmd_compare(cm_input, cm_labels, cm_methods, cm_ratios, cm_reps, seed, cm_l2,
                         cmp_opts, cm_out, cm_curve);
    }
    if (bench->parsed()) {
      return cmd_bench(be_nodes, be_avg_degree, bench_opts, seed, be_out);
    }
    if (dump->parsed()) {
      return cmd_dump_levels(du_input, dump_opts, seed, du_out_dir);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
