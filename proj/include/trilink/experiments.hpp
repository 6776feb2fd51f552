#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "trilink/selector.hpp"

namespace trilink {

/// Parameters shared by the synthetic-graph experiment drivers.
struct SweepSpec {
  std::uint32_t n = 20000;
  std::vector<double> d_grid;
  std::vector<std::uint64_t> seeds;
  double alpha = 0.5;
  double ratio = 0.1;
  std::uint64_t m = 50000;
  double epsilon = 1e-9;
};

void validate_spec(const SweepSpec& spec);

struct SweepDRow {
  double d = 0.0;
  double avcc_mean = 0.0;
  double avcc_std = 0.0;
};

/// Closure probability against resulting clustering: generates one graph
/// per (d, seed), measures the exact average clustering coefficient, and
/// aggregates over seeds. Rows come back sorted by d.
std::vector<SweepDRow> sweep_d(const SweepSpec& spec);

struct CrossoverRow {
  double d = 0.0;
  double avcc_mean = 0.0;
  double auc_hei_mean = 0.0;
  double auc_jac_mean = 0.0;
};

struct CrossoverResult {
  bool found = false;
  double d_star = 0.0;     // smallest grid d where jac's mean AUC exceeds hei's
  double avcc_star = 0.0;  // mean clustering at d_star
  std::vector<CrossoverRow> table;
};

/// Head-to-head of the heterogeneity score and the common-neighbor score
/// across the d grid. Both methods are evaluated on the same split and
/// the same comparison stream per cell.
CrossoverResult find_crossover(const SweepSpec& spec);

struct SweepNRow {
  std::uint32_t n = 0;
  double d = 0.0;
  double avcc_mean = 0.0;
  double avcc_std = 0.0;
};

/// Clustering as a function of graph order. d_values holds either one
/// probability applied to every n, or one probability per n-grid entry.
std::vector<SweepNRow> sweep_n(const std::vector<std::uint32_t>& n_grid,
                               const std::vector<double>& d_values,
                               const std::vector<std::uint64_t>& seeds, double epsilon = 1e-9);

struct TableEvalConfig {
  double alpha = 0.5;
  double ratio = 0.1;
  std::uint64_t m = 100000;
  std::uint64_t seed = 0;
  BoundaryConfig boundary;
};

struct TableRow {
  std::string dataset;
  bool ok = false;
  std::string error;
  std::uint64_t n = 0;
  std::uint64_t e = 0;
  double avcc = 0.0;
  double auc_hoi = 0.0;
  double auc_hei = 0.0;
  double auc_jac = 0.0;
  std::string regime;
};

/// Per-dataset ingestion + evaluation of the three scores plus the regime
/// classification. A dataset that fails to parse or evaluate is reported
/// in its row and the run continues. Successful rows are sorted by
/// ascending clustering coefficient; failed rows follow in input order.
std::vector<TableRow> table_eval(const std::vector<std::pair<std::string, std::string>>& datasets,
                                 const TableEvalConfig& config);

std::string sweep_d_csv(const std::vector<SweepDRow>& rows);
nlohmann::ordered_json sweep_d_json(const SweepSpec& spec, const std::vector<SweepDRow>& rows);
std::string crossover_csv(const CrossoverResult& result);
nlohmann::ordered_json crossover_json(const SweepSpec& spec, const CrossoverResult& result);
std::string sweep_n_csv(const std::vector<SweepNRow>& rows);
nlohmann::ordered_json sweep_n_json(const std::vector<SweepNRow>& rows);
std::string table_csv(const std::vector<TableRow>& rows);
nlohmann::ordered_json table_json(const std::vector<TableRow>& rows);

}  // namespace trilink
