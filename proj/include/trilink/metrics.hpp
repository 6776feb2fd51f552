#pragma once

#include <cstdint>
#include <vector>

#include "trilink/graph.hpp"

namespace trilink {

struct ClusteringReport {
  double average = 0.0;
  std::vector<double> per_node;  // filled only when requested (exact mode)
  bool sampled = false;
  std::uint32_t node_count_used = 0;  // averaging denominator
  std::uint32_t sample_size = 0;      // sampled mode only
  std::uint64_t seed = 0;             // sampled mode only
};

/// Local clustering coefficient of node i: the fraction of i's neighbor
/// pairs that are themselves adjacent. Defined as 0 for degree < 2.
double local_clustering(const Graph& g, NodeId i);

/// Triangles incident to each node, counted once per triangle via a
/// degree-ordered orientation.
std::vector<std::uint64_t> per_node_triangles(const Graph& g);

std::uint64_t triangle_count(const Graph& g);

/// Mean local clustering over all N nodes (degree-0/1 nodes contribute 0).
/// Accumulation is compensated and runs in ascending node order, so the
/// result is reproducible and stable to ~1e-12 on million-node graphs.
ClusteringReport average_clustering_exact(const Graph& g, bool keep_per_node = false);

/// Mean local clustering over a uniform without-replacement node sample.
/// sample_size must be in [1, N]; with sample_size == N this reproduces the
/// exact average bit for bit.
ClusteringReport average_clustering_sampled(const Graph& g, std::uint32_t sample_size,
                                            std::uint64_t seed);

std::uint32_t max_degree(const Graph& g);

/// Compensated (Kahan) accumulator.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

}  // namespace trilink
