#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "trilink/eval.hpp"
#include "trilink/graph.hpp"

namespace trilink {

struct ParseOptions {
  bool symmetrize = true;            // treat directed inputs as undirected
  std::string comment_prefix = "#";  // lines starting with this are skipped
};

/// Ingestion record for one parsed edge-list file: the injective mapping
/// from original ids to dense ids 0..N-1, plus repair counters. Original
/// ids may be arbitrary integers or arbitrary tokens; they are assigned
/// dense ids in sorted order (numeric when every token parses as an
/// integer, lexicographic otherwise), so permuting input lines cannot
/// change the resulting graph.
class EdgeListDocument {
 public:
  bool numeric_ids() const { return numeric_; }
  std::uint32_t node_count() const;

  /// Dense id for an original-id token; nullopt when unknown.
  std::optional<NodeId> to_dense(std::string_view token) const;

  /// Original id for a dense id, rendered as text.
  std::string raw_id(NodeId dense) const;

  std::uint64_t edge_count_raw = 0;  // edge records seen (comments excluded)
  std::uint64_t dropped_self_loops = 0;
  std::uint64_t dropped_duplicates = 0;
  bool symmetrized = false;

 private:
  friend std::pair<Graph, EdgeListDocument> parse_edge_list(const std::string&,
                                                            const ParseOptions&);
  bool numeric_ = true;
  std::vector<std::int64_t> numeric_ids_;   // sorted; index = dense id
  std::vector<std::string> token_ids_;      // sorted; index = dense id
};

/// Reads a whitespace-separated edge list. Blank lines and comment lines
/// are skipped; every other line must hold exactly two tokens, else the
/// line number is reported. Self-loops and duplicates (including reversed
/// ones) are repaired and counted on the returned document.
std::pair<Graph, EdgeListDocument> parse_edge_list(const std::string& path,
                                                   const ParseOptions& options = {});

/// One "u v" line per edge with u < v, ascending lexicographic order.
/// Parsing the written file reproduces the graph exactly whenever every
/// node has degree >= 1 (the format carries no isolated-node record).
void write_edge_list(const Graph& g, const std::string& path);

/// Loads one pair-per-line file (same line format as edge lists). Pairs
/// are remapped through `document` when given, otherwise read as dense
/// ids; out-of-range and self pairs are rejected with their line number.
std::vector<Edge> load_pair_list(const std::string& path, NodeId node_count,
                                 const EdgeListDocument* document = nullptr);

/// Loads externally supplied positive and negative pair files. On top of
/// load_pair_list's checks, any negative that duplicates a positive is
/// rejected.
std::pair<std::vector<Edge>, std::vector<Edge>> load_split_files(
    const std::string& positives_path, const std::string& negatives_path, NodeId node_count,
    const EdgeListDocument* document = nullptr);

struct MethodReport {
  std::string name;
  double alpha = 0.5;
  AucResult auc;
  std::vector<HitsResult> hits;
};

struct EvalReport {
  std::string dataset;
  std::uint64_t n = 0;
  std::uint64_t e = 0;
  double avcc = 0.0;
  std::vector<MethodReport> methods;
  std::string regime;
  double boundary_lower = 0.27;
  double boundary_upper = 0.37;
};

nlohmann::ordered_json eval_report_json(const EvalReport& report);

/// CSV mirror of the JSON report, one row per method.
std::string eval_report_csv(const EvalReport& report);

/// Shortest practical decimal rendering used by all CSV emitters.
std::string format_double(double value);

}  // namespace trilink
