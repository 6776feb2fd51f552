#include "trilink/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trilink/generate.hpp"
#include "trilink/io.hpp"
#include "trilink/metrics.hpp"
#include "trilink/rng.hpp"

namespace trilink {

namespace {

constexpr std::uint64_t kCellSplitStream = 0x78737074ull;  // "xspt"
constexpr std::uint64_t kCellEvalStream = 0x7865766cull;   // "xevl"

struct MeanStd {
  double mean = 0.0;
  double std_dev = 0.0;
};

MeanStd aggregate(const std::vector<double>& values) {
  MeanStd out;
  KahanSum sum;
  for (const double v : values) sum.add(v);
  out.mean = sum.value() / static_cast<double>(values.size());
  if (values.size() > 1) {
    KahanSum sq;
    for (const double v : values) sq.add((v - out.mean) * (v - out.mean));
    out.std_dev = std::sqrt(sq.value() / static_cast<double>(values.size() - 1));
  }
  return out;
}

}  // namespace

void validate_spec(const SweepSpec& spec) {
  if (spec.d_grid.empty()) throw std::invalid_argument("d grid must not be empty");
  if (spec.seeds.empty()) throw std::invalid_argument("seed list must not be empty");
  for (const double d : spec.d_grid)
    if (!(d >= 0.0 && d <= 1.0)) throw std::invalid_argument("every d must lie in [0, 1]");
  if (spec.n < 2) throw std::invalid_argument("n must be at least 2");
  if (!(spec.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
}

std::vector<SweepDRow> sweep_d(const SweepSpec& spec) {
  validate_spec(spec);
  auto grid = spec.d_grid;
  std::sort(grid.begin(), grid.end());

  std::vector<SweepDRow> rows;
  rows.reserve(grid.size());
  for (const double d : grid) {
    std::vector<double> avcc;
    avcc.reserve(spec.seeds.size());
    for (const std::uint64_t seed : spec.seeds) {
      const Graph g = generate_graph({spec.n, d, spec.epsilon, seed});
      avcc.push_back(average_clustering_exact(g).average);
    }
    const auto agg = aggregate(avcc);
    rows.push_back({d, agg.mean, agg.std_dev});
  }
  return rows;
}

CrossoverResult find_crossover(const SweepSpec& spec) {
  validate_spec(spec);
  auto grid = spec.d_grid;
  std::sort(grid.begin(), grid.end());

  const ScoreParams params{spec.alpha, 1e-9};
  CrossoverResult result;
  result.table.reserve(grid.size());
  for (const double d : grid) {
    std::vector<double> avcc, hei, jac;
    for (const std::uint64_t seed : spec.seeds) {
      const Graph g = generate_graph({spec.n, d, spec.epsilon, seed});
      avcc.push_back(average_clustering_exact(g).average);
      const EdgeSplit split = split_edges(g, spec.ratio, derive_stream(seed, kCellSplitStream));
      const std::uint64_t eval_seed = derive_stream(seed, kCellEvalStream);
      hei.push_back(auc(Scorer{ScorerKind::hei, params}, split, spec.m, eval_seed).auc);
      jac.push_back(auc(Scorer{ScorerKind::jac, params}, split, spec.m, eval_seed).auc);
    }
    CrossoverRow row;
    row.d = d;
    row.avcc_mean = aggregate(avcc).mean;
    row.auc_hei_mean = aggregate(hei).mean;
    row.auc_jac_mean = aggregate(jac).mean;
    result.table.push_back(row);
    if (!result.found && row.auc_jac_mean > row.auc_hei_mean) {
      result.found = true;
      result.d_star = row.d;
      result.avcc_star = row.avcc_mean;
    }
  }
  return result;
}

std::vector<SweepNRow> sweep_n(const std::vector<std::uint32_t>& n_grid,
                               const std::vector<double>& d_values,
                               const std::vector<std::uint64_t>& seeds, double epsilon) {
  if (n_grid.empty()) throw std::invalid_argument("n grid must not be empty");
  if (seeds.empty()) throw std::invalid_argument("seed list must not be empty");
  if (d_values.size() != 1 && d_values.size() != n_grid.size())
    throw std::invalid_argument("d policy must hold one value or one per n");

  std::vector<std::size_t> order(n_grid.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return n_grid[a] < n_grid[b]; });

  std::vector<SweepNRow> rows;
  rows.reserve(n_grid.size());
  for (const std::size_t idx : order) {
    const std::uint32_t n = n_grid[idx];
    const double d = d_values.size() == 1 ? d_values.front() : d_values[idx];
    std::vector<double> avcc;
    avcc.reserve(seeds.size());
    for (const std::uint64_t seed : seeds) {
      const Graph g = generate_graph({n, d, epsilon, seed});
      avcc.push_back(average_clustering_exact(g).average);
    }
    const auto agg = aggregate(avcc);
    rows.push_back({n, d, agg.mean, agg.std_dev});
  }
  return rows;
}

std::vector<TableRow> table_eval(const std::vector<std::pair<std::string, std::string>>& datasets,
                                 const TableEvalConfig& config) {
  const ScoreParams params{config.alpha, 1e-9};
  std::vector<TableRow> ok_rows, failed_rows;
  for (const auto& [name, path] : datasets) {
    TableRow row;
    row.dataset = name;
    try {
      auto [graph, doc] = parse_edge_list(path);
      row.n = graph.node_count();
      row.e = graph.edge_count();
      row.avcc = average_clustering_exact(graph).average;
      const EdgeSplit split =
          split_edges(graph, config.ratio, derive_stream(config.seed, kCellSplitStream));
      const std::uint64_t eval_seed = derive_stream(config.seed, kCellEvalStream);
      row.auc_hoi = auc(Scorer{ScorerKind::hoi, params}, split, config.m, eval_seed).auc;
      row.auc_hei = auc(Scorer{ScorerKind::hei, params}, split, config.m, eval_seed).auc;
      row.auc_jac = auc(Scorer{ScorerKind::jac, params}, split, config.m, eval_seed).auc;
      row.regime = std::string(regime_name(recommend(row.avcc, config.boundary).regime));
      row.ok = true;
      ok_rows.push_back(std::move(row));
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
      failed_rows.push_back(std::move(row));
    }
  }
  std::stable_sort(ok_rows.begin(), ok_rows.end(),
                   [](const TableRow& a, const TableRow& b) { return a.avcc < b.avcc; });
  ok_rows.insert(ok_rows.end(), std::make_move_iterator(failed_rows.begin()),
                 std::make_move_iterator(failed_rows.end()));
  return ok_rows;
}

std::string sweep_d_csv(const std::vector<SweepDRow>& rows) {
  std::string out = "d,avcc_mean,avcc_std\n";
  for (const auto& r : rows)
    out += format_double(r.d) + "," + format_double(r.avcc_mean) + "," +
           format_double(r.avcc_std) + "\n";
  return out;
}

namespace {

nlohmann::ordered_json spec_json(const SweepSpec& spec) {
  return {{"n", spec.n},        {"d_grid", spec.d_grid}, {"seeds", spec.seeds},
          {"alpha", spec.alpha}, {"ratio", spec.ratio},   {"m", spec.m},
          {"epsilon", spec.epsilon}};
}

}  // namespace

nlohmann::ordered_json sweep_d_json(const SweepSpec& spec, const std::vector<SweepDRow>& rows) {
  nlohmann::ordered_json j;
  j["experiment"] = "sweep-d";
  j["spec"] = spec_json(spec);
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    j["rows"].push_back({{"d", r.d}, {"avcc_mean", r.avcc_mean}, {"avcc_std", r.avcc_std}});
  return j;
}

std::string crossover_csv(const CrossoverResult& result) {
  std::string out = "d,avcc_mean,auc_hei_mean,auc_jac_mean\n";
  for (const auto& r : result.table)
    out += format_double(r.d) + "," + format_double(r.avcc_mean) + "," +
           format_double(r.auc_hei_mean) + "," + format_double(r.auc_jac_mean) + "\n";
  return out;
}

nlohmann::ordered_json crossover_json(const SweepSpec& spec, const CrossoverResult& result) {
  nlohmann::ordered_json j;
  j["experiment"] = "crossover";
  j["spec"] = spec_json(spec);
  j["found"] = result.found;
  if (result.found) {
    j["d_star"] = result.d_star;
    j["avcc_star"] = result.avcc_star;
  } else {
    j["d_star"] = nullptr;
    j["avcc_star"] = nullptr;
  }
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : result.table)
    j["rows"].push_back({{"d", r.d},
                         {"avcc_mean", r.avcc_mean},
                         {"auc_hei_mean", r.auc_hei_mean},
                         {"auc_jac_mean", r.auc_jac_mean}});
  return j;
}

std::string sweep_n_csv(const std::vector<SweepNRow>& rows) {
  std::string out = "n,d,avcc_mean,avcc_std\n";
  for (const auto& r : rows)
    out += std::to_string(r.n) + "," + format_double(r.d) + "," + format_double(r.avcc_mean) +
           "," + format_double(r.avcc_std) + "\n";
  return out;
}

nlohmann::ordered_json sweep_n_json(const std::vector<SweepNRow>& rows) {
  nlohmann::ordered_json j;
  j["experiment"] = "sweep-n";
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    j["rows"].push_back(
        {{"n", r.n}, {"d", r.d}, {"avcc_mean", r.avcc_mean}, {"avcc_std", r.avcc_std}});
  return j;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::string out = "dataset,n,e,avcc,auc_hoi,auc_hei,auc_jac,regime\n";
  for (const auto& r : rows) {
    if (!r.ok) continue;  // failures are carried by the JSON mirror
    out += r.dataset + "," + std::to_string(r.n) + "," + std::to_string(r.e) + "," +
           format_double(r.avcc) + "," + format_double(r.auc_hoi) + "," +
           format_double(r.auc_hei) + "," + format_double(r.auc_jac) + "," + r.regime + "\n";
  }
  return out;
}

nlohmann::ordered_json table_json(const std::vector<TableRow>& rows) {
  nlohmann::ordered_json j;
  j["experiment"] = "table";
  j["rows"] = nlohmann::ordered_json::array();
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    if (r.ok) {
      j["rows"].push_back({{"dataset", r.dataset},
                           {"n", r.n},
                           {"e", r.e},
                           {"avcc", r.avcc},
                           {"auc_hoi", r.auc_hoi},
                           {"auc_hei", r.auc_hei},
                           {"auc_jac", r.auc_jac},
                           {"regime", r.regime}});
    } else {
      j["failures"].push_back({{"dataset", r.dataset}, {"error", r.error}});
    }
  }
  return j;
}

}  // namespace trilink
