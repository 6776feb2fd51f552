// trilink — topology-only link prediction toolkit.
//
// Subcommands: generate, stats, score, eval, select, sweep-d, crossover,
// sweep-n, table. Graphs travel as whitespace-separated edge lists; all
// randomness flows from explicit 64-bit seeds, so every run is
// reproducible.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "trilink/eval.hpp"
#include "trilink/experiments.hpp"
#include "trilink/generate.hpp"
#include "trilink/io.hpp"
#include "trilink/metrics.hpp"
#include "trilink/predictors.hpp"
#include "trilink/rng.hpp"
#include "trilink/selector.hpp"

namespace {

using namespace trilink;

constexpr std::uint64_t kCliEvalStream = 0x636c6965ull;   // "clie"
constexpr std::uint64_t kCliHitsStream = 0x636c6968ull;   // "clih"

void warn_degenerate_alpha(double alpha) {
  if (alpha < 0.05)
    std::cerr << "warning: alpha=" << alpha
              << " is close to 0; degree-difference scores degenerate there\n";
}

std::pair<Graph, EdgeListDocument> load_graph(const std::string& path, bool symmetrize = true) {
  ParseOptions options;
  options.symmetrize = symmetrize;
  auto result = parse_edge_list(path, options);
  const auto& doc = result.second;
  std::cerr << "loaded " << path << ": n=" << result.first.node_count()
            << " e=" << result.first.edge_count() << " (raw records " << doc.edge_count_raw
            << ", self-loops dropped " << doc.dropped_self_loops << ", duplicates dropped "
            << doc.dropped_duplicates << (doc.symmetrized ? ", treated as undirected" : "")
            << ")\n";
  return result;
}

std::string score_text(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out.flush()) throw std::runtime_error("write failure on '" + path + "'");
}

void emit_experiment(const std::string& out_dir, const std::string& name, const std::string& csv,
                     const nlohmann::ordered_json& json) {
  std::cout << json.dump(2) << "\n";
  if (out_dir.empty()) return;
  std::filesystem::create_directories(out_dir);
  const auto base = std::filesystem::path(out_dir) / name;
  write_text_file((base).string() + ".csv", csv);
  write_text_file((base).string() + ".json", json.dump(2) + "\n");
  std::cerr << "wrote " << base.string() << ".{csv,json}\n";
}

struct EvalArgs {
  std::string graph_path;
  std::string methods = "hei,hoi,jac,cn";
  double ratio = 0.1;
  std::uint64_t m = 100000;
  double alpha = 0.5;
  std::uint64_t seed = 0;
  std::string negatives_path, positives_path;
  std::vector<std::uint64_t> hits_ks;
  std::uint64_t negative_pool_size = 100000;
  std::string csv_path;
  std::string dataset_name;
  BoundaryConfig boundary;
};

EvalReport run_eval(const EvalArgs& args) {
  warn_degenerate_alpha(args.alpha);
  auto [graph, doc] = load_graph(args.graph_path);

  EdgeSplit split;
  Graph observed;  // training structure plus held-out positives
  if (!args.positives_path.empty()) {
    auto positives = load_pair_list(args.positives_path, graph.node_count(), &doc);
    auto observed_edges = graph.edges();
    observed_edges.insert(observed_edges.end(), positives.begin(), positives.end());
    observed = build_graph(graph.node_count(), observed_edges).graph;
    split = make_external_split(std::move(graph), std::move(positives));
  } else {
    split = split_edges(graph, args.ratio, args.seed);
    observed = std::move(graph);
  }

  std::vector<Edge> negative_pool;
  if (!args.negatives_path.empty()) {
    negative_pool = load_pair_list(args.negatives_path, observed.node_count(), &doc);
    std::vector<Edge> sorted_positives(split.positives);
    std::sort(sorted_positives.begin(), sorted_positives.end());
    for (const auto& e : negative_pool)
      if (std::binary_search(sorted_positives.begin(), sorted_positives.end(), e))
        throw std::runtime_error("negative pair (" + std::to_string(e.first) + ", " +
                                 std::to_string(e.second) + ") duplicates a held-out positive");
  } else if (!args.hits_ks.empty()) {
    negative_pool =
        sample_negatives(observed, args.negative_pool_size, derive_stream(args.seed, kCliHitsStream));
  }

  EvalReport report;
  report.dataset = args.dataset_name.empty() ? args.graph_path : args.dataset_name;
  report.n = observed.node_count();
  report.e = observed.edge_count();
  report.avcc = average_clustering_exact(observed).average;
  const Recommendation rec = recommend(report.avcc, args.boundary);
  report.regime = std::string(regime_name(rec.regime));
  report.boundary_lower = args.boundary.lower;
  report.boundary_upper = args.boundary.upper;

  const ScoreParams params{args.alpha, 1e-9};
  const std::uint64_t eval_seed = derive_stream(args.seed, kCliEvalStream);
  std::stringstream methods(args.methods);
  std::string method;
  while (std::getline(methods, method, ',')) {
    if (method.empty()) continue;
    const Scorer scorer{scorer_kind_from_name(method), params};
    MethodReport mr;
    mr.name = method;
    mr.alpha = args.alpha;
    const ScoreFn fn = scorer.bind(split.train_graph);
    mr.auc = args.negatives_path.empty() ? auc(fn, split, args.m, eval_seed)
                                         : auc_with_pool(fn, split, negative_pool, args.m, eval_seed);
    for (const std::uint64_t k : args.hits_ks) mr.hits.push_back(hits_at_k(fn, split, negative_pool, k));
    report.methods.push_back(std::move(mr));
  }
  return report;
}

int run(int argc, char** argv) {
  CLI::App app{"topology-only link prediction toolkit"};
  app.require_subcommand(1);

  // generate
  auto* cmd_generate = app.add_subcommand("generate", "synthesize a scale-free graph");
  GeneratorConfig gen_cfg;
  std::string gen_out;
  cmd_generate->add_option("--n", gen_cfg.n, "node count")->required();
  cmd_generate->add_option("--d", gen_cfg.d, "triangle-closure probability in [0,1]")->required();
  cmd_generate->add_option("--seed", gen_cfg.seed, "RNG seed")->required();
  cmd_generate->add_option("--epsilon", gen_cfg.epsilon, "selection weight guard");
  cmd_generate->add_option("--out", gen_out, "output edge-list path")->required();
  cmd_generate->callback([&] {
    const Graph g = generate_graph(gen_cfg);
    write_edge_list(g, gen_out);
    std::cerr << "generated n=" << g.node_count() << " e=" << g.edge_count() << " -> " << gen_out
              << "\n";
  });

  // stats
  auto* cmd_stats = app.add_subcommand("stats", "basic statistics of a graph");
  std::string stats_path;
  std::uint32_t stats_sample = 0;
  std::uint64_t stats_seed = 0;
  cmd_stats->add_option("graph", stats_path, "edge-list path")->required();
  cmd_stats->add_option("--sample", stats_sample, "sample size for the clustering average");
  cmd_stats->add_option("--seed", stats_seed, "sampling seed");
  cmd_stats->callback([&] {
    auto [g, doc] = load_graph(stats_path);
    const ClusteringReport avcc = stats_sample > 0
                                      ? average_clustering_sampled(g, stats_sample, stats_seed)
                                      : average_clustering_exact(g);
    nlohmann::ordered_json j;
    j["n"] = g.node_count();
    j["e"] = g.edge_count();
    j["avcc"] = avcc.average;
    j["avcc_mode"] = avcc.sampled ? "sampled" : "exact";
    if (avcc.sampled) {
      j["avcc_sample_size"] = avcc.sample_size;
      j["avcc_seed"] = avcc.seed;
    }
    j["triangles"] = triangle_count(g);
    j["max_degree"] = max_degree(g);
    std::cout << j.dump(2) << "\n";
  });

  // score
  auto* cmd_score = app.add_subcommand("score", "score node pairs");
  std::string score_path, score_method = "jac", score_pairs = "-";
  double score_alpha = 0.5;
  cmd_score->add_option("graph", score_path, "edge-list path")->required();
  cmd_score->add_option("--method", score_method, "hei|hoi|jac|cn");
  cmd_score->add_option("--alpha", score_alpha, "degree-difference exponent");
  cmd_score->add_option("--pairs", score_pairs, "pair file, '-' for stdin");
  cmd_score->callback([&] {
    warn_degenerate_alpha(score_alpha);
    auto [g, doc] = load_graph(score_path);
    const Scorer scorer{scorer_kind_from_name(score_method), ScoreParams{score_alpha, 1e-9}};

    auto score_line = [&](const std::string& a, const std::string& b) {
      const auto u = doc.to_dense(a), v = doc.to_dense(b);
      if (!u || !v) throw std::runtime_error("pair id '" + (u ? b : a) + "' not in graph");
      std::cout << a << " " << b << " " << score_text(scorer(g, *u, *v)) << "\n";
    };
    if (score_pairs == "-") {
      std::string a, b;
      while (std::cin >> a >> b) score_line(a, b);
    } else {
      for (const Edge e : load_pair_list(score_pairs, g.node_count(), &doc))
        std::cout << doc.raw_id(e.first) << " " << doc.raw_id(e.second) << " "
                  << score_text(scorer(g, e.first, e.second)) << "\n";
    }
  });

  // eval
  auto* cmd_eval = app.add_subcommand("eval", "split, evaluate and report");
  EvalArgs eval_args;
  cmd_eval->add_option("graph", eval_args.graph_path, "edge-list path")->required();
  cmd_eval->add_option("--methods", eval_args.methods, "comma list of hei,hoi,jac,cn");
  cmd_eval->add_option("--ratio", eval_args.ratio, "held-out fraction of edges");
  cmd_eval->add_option("--m", eval_args.m, "AUC comparisons");
  cmd_eval->add_option("--alpha", eval_args.alpha, "degree-difference exponent");
  cmd_eval->add_option("--seed", eval_args.seed, "seed for split/evaluation");
  cmd_eval->add_option("--negatives", eval_args.negatives_path, "fixed negative pair file");
  cmd_eval->add_option("--positives", eval_args.positives_path,
                       "held-out positives file (graph then serves as the training structure)");
  cmd_eval->add_option("--hits", eval_args.hits_ks, "Hits@K cutoffs")->delimiter(',');
  cmd_eval->add_option("--negative-pool", eval_args.negative_pool_size,
                       "sampled negative pool size for Hits@K");
  cmd_eval->add_option("--csv", eval_args.csv_path, "also write a CSV mirror here");
  cmd_eval->add_option("--dataset", eval_args.dataset_name, "dataset label for the report");
  cmd_eval->add_option("--lower", eval_args.boundary.lower, "regime band lower edge");
  cmd_eval->add_option("--upper", eval_args.boundary.upper, "regime band upper edge");
  cmd_eval->callback([&] {
    const EvalReport report = run_eval(eval_args);
    std::cout << eval_report_json(report).dump(2) << "\n";
    if (!eval_args.csv_path.empty()) write_text_file(eval_args.csv_path, eval_report_csv(report));
  });

  // select
  auto* cmd_select = app.add_subcommand("select", "recommend a predictor family");
  std::string select_path;
  BoundaryConfig select_boundary;
  double select_val_ratio = 0.05;
  std::uint64_t select_m = 50000, select_seed = 0;
  double select_alpha = 0.5;
  cmd_select->add_option("graph", select_path, "edge-list path")->required();
  cmd_select->add_option("--lower", select_boundary.lower, "band lower edge");
  cmd_select->add_option("--upper", select_boundary.upper, "band upper edge");
  cmd_select->add_option("--val-ratio", select_val_ratio, "nested validation fraction");
  cmd_select->add_option("--m", select_m, "AUC comparisons on validation");
  cmd_select->add_option("--seed", select_seed, "seed");
  cmd_select->add_option("--alpha", select_alpha, "degree-difference exponent");
  cmd_select->callback([&] {
    warn_degenerate_alpha(select_alpha);
    auto [g, doc] = load_graph(select_path);
    const Recommendation rec = auto_select(g, select_boundary, select_val_ratio, select_m,
                                           select_seed, ScoreParams{select_alpha, 1e-9});
    nlohmann::ordered_json j;
    j["regime"] = std::string(regime_name(rec.regime));
    j["avcc"] = rec.avcc;
    if (rec.chosen) {
      j["chosen"] = {{"method", std::string(scorer_name(rec.chosen->kind))},
                     {"alpha", rec.chosen->params.alpha}};
    } else {
      j["chosen"] = nullptr;
    }
    j["validation_auc"] = nlohmann::ordered_json::object();
    for (const auto& [name, value] : rec.validation_auc) j["validation_auc"][name] = value;
    j["boundary"] = {{"lower", select_boundary.lower}, {"upper", select_boundary.upper}};
    std::cout << j.dump(2) << "\n";
  });

  // shared sweep options
  const auto add_sweep_options = [](CLI::App* cmd, SweepSpec& spec, std::string& out_dir,
                                    bool& paper_scale) {
    cmd->add_option("--n", spec.n, "node count (desk-scale default)");
    cmd->add_option("--d-grid", spec.d_grid, "closure probabilities")->delimiter(',');
    cmd->add_option("--seeds", spec.seeds, "generation seeds")->delimiter(',');
    cmd->add_option("--alpha", spec.alpha, "degree-difference exponent");
    cmd->add_option("--ratio", spec.ratio, "held-out fraction");
    cmd->add_option("--m", spec.m, "AUC comparisons");
    cmd->add_option("--epsilon", spec.epsilon, "selection weight guard");
    cmd->add_option("--out-dir", out_dir, "directory for <experiment>.csv/json");
    cmd->add_flag("--paper-scale", paper_scale, "run at n=100000");
  };

  // sweep-d
  auto* cmd_sweep_d = app.add_subcommand("sweep-d", "clustering versus closure probability");
  SweepSpec sweep_d_spec;
  sweep_d_spec.d_grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  sweep_d_spec.seeds = {1, 2, 3};
  std::string sweep_d_out;
  bool sweep_d_paper = false;
  add_sweep_options(cmd_sweep_d, sweep_d_spec, sweep_d_out, sweep_d_paper);
  cmd_sweep_d->callback([&] {
    if (sweep_d_paper) sweep_d_spec.n = 100000;
    const auto rows = sweep_d(sweep_d_spec);
    emit_experiment(sweep_d_out, "sweep-d", sweep_d_csv(rows), sweep_d_json(sweep_d_spec, rows));
  });

  // crossover
  auto* cmd_crossover = app.add_subcommand("crossover", "where the common-neighbor score takes over");
  SweepSpec crossover_spec;
  crossover_spec.d_grid = {0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40, 0.45, 0.50};
  crossover_spec.seeds = {1, 2, 3};
  std::string crossover_out;
  bool crossover_paper = false;
  add_sweep_options(cmd_crossover, crossover_spec, crossover_out, crossover_paper);
  cmd_crossover->callback([&] {
    if (crossover_paper) crossover_spec.n = 100000;
    warn_degenerate_alpha(crossover_spec.alpha);
    const auto result = find_crossover(crossover_spec);
    emit_experiment(crossover_out, "crossover", crossover_csv(result),
                    crossover_json(crossover_spec, result));
  });

  // sweep-n
  auto* cmd_sweep_n = app.add_subcommand("sweep-n", "clustering versus graph order");
  std::vector<std::uint32_t> n_grid = {1000, 10000, 100000};
  std::vector<double> d_values = {0.27};
  std::vector<std::uint64_t> sweep_n_seeds = {1, 2, 3};
  double sweep_n_epsilon = 1e-9;
  std::string sweep_n_out;
  cmd_sweep_n->add_option("--n-grid", n_grid, "node counts")->delimiter(',');
  cmd_sweep_n->add_option("--d", d_values, "closure probability (one value, or one per n)")
      ->delimiter(',');
  cmd_sweep_n->add_option("--seeds", sweep_n_seeds, "generation seeds")->delimiter(',');
  cmd_sweep_n->add_option("--epsilon", sweep_n_epsilon, "selection weight guard");
  cmd_sweep_n->add_option("--out-dir", sweep_n_out, "directory for <experiment>.csv/json");
  cmd_sweep_n->callback([&] {
    const auto rows = sweep_n(n_grid, d_values, sweep_n_seeds, sweep_n_epsilon);
    emit_experiment(sweep_n_out, "sweep-n", sweep_n_csv(rows), sweep_n_json(rows));
  });

  // table
  auto* cmd_table = app.add_subcommand("table", "evaluate real datasets side by side");
  std::vector<std::string> dataset_args;
  TableEvalConfig table_config;
  std::string table_out;
  cmd_table->add_option("--dataset", dataset_args, "name=path (repeatable)")
      ->required()
      ->take_all();
  cmd_table->add_option("--alpha", table_config.alpha, "degree-difference exponent");
  cmd_table->add_option("--ratio", table_config.ratio, "held-out fraction");
  cmd_table->add_option("--m", table_config.m, "AUC comparisons");
  cmd_table->add_option("--seed", table_config.seed, "seed");
  cmd_table->add_option("--lower", table_config.boundary.lower, "band lower edge");
  cmd_table->add_option("--upper", table_config.boundary.upper, "band upper edge");
  cmd_table->add_option("--out-dir", table_out, "directory for <experiment>.csv/json");
  cmd_table->callback([&] {
    warn_degenerate_alpha(table_config.alpha);
    std::vector<std::pair<std::string, std::string>> datasets;
    for (const auto& arg : dataset_args) {
      const auto pos = arg.find('=');
      if (pos == std::string::npos || pos == 0 || pos + 1 == arg.size())
        throw CLI::ValidationError("--dataset expects name=path, got '" + arg + "'");
      datasets.emplace_back(arg.substr(0, pos), arg.substr(pos + 1));
    }
    const auto rows = table_eval(datasets, table_config);
    for (const auto& row : rows)
      if (!row.ok) std::cerr << "dataset '" << row.dataset << "' failed: " << row.error << "\n";
    emit_experiment(table_out, "table", table_csv(rows), table_json(rows));
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
