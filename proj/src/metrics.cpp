#include "trilink/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "trilink/rng.hpp"

namespace trilink {

namespace {

constexpr std::uint64_t kSampleStream = 0x73616d706c65ull;  // "sample"

std::uint64_t sorted_intersection_count(std::span<const NodeId> a, std::span<const NodeId> b) {
  std::uint64_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

// Numerator shared by both averaging modes: twice the triangle count of i,
// so that c_i comes out as the same double on either path.
double clustering_from_counts(std::uint64_t twice_triangles, std::uint32_t k) {
  if (k < 2) return 0.0;
  return static_cast<double>(twice_triangles) /
         (static_cast<double>(k) * static_cast<double>(k - 1));
}

}  // namespace

double local_clustering(const Graph& g, NodeId i) {
  const std::uint32_t k = g.degree(i);
  if (k < 2) return 0.0;
  const auto nb = g.neighbors(i);
  std::uint64_t closed = 0;  // each triangle at i counted twice
  for (const NodeId z : nb) closed += sorted_intersection_count(nb, g.neighbors(z));
  return clustering_from_counts(closed, k);
}

std::vector<std::uint64_t> per_node_triangles(const Graph& g) {
  const NodeId n = g.node_count();
  std::vector<std::uint64_t> triangles(n, 0);

  // Orient every edge from lower to higher (degree, id) rank; each triangle
  // is then found exactly once, at its lowest-ranked vertex pair.
  const auto rank_less = [&](NodeId a, NodeId b) {
    const std::uint32_t da = g.degree(a), db = g.degree(b);
    return da != db ? da < db : a < b;
  };

  std::vector<std::uint64_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId u = 0; u < n; ++u) {
    std::uint64_t out = 0;
    for (const NodeId v : g.neighbors(u))
      if (rank_less(u, v)) ++out;
    offsets[u + 1] = offsets[u] + out;
  }
  std::vector<NodeId> forward(offsets[n]);
  {
    std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
    for (NodeId u = 0; u < n; ++u)
      for (const NodeId v : g.neighbors(u))
        if (rank_less(u, v)) forward[cursor[u]++] = v;  // ascending ids per run
  }

  for (NodeId u = 0; u < n; ++u) {
    const std::span<const NodeId> fu{forward.data() + offsets[u], forward.data() + offsets[u + 1]};
    for (const NodeId v : fu) {
      const std::span<const NodeId> fv{forward.data() + offsets[v],
                                       forward.data() + offsets[v + 1]};
      std::size_t i = 0, j = 0;
      while (i < fu.size() && j < fv.size()) {
        if (fu[i] < fv[j]) {
          ++i;
        } else if (fv[j] < fu[i]) {
          ++j;
        } else {
          ++triangles[u];
          ++triangles[v];
          ++triangles[fu[i]];
          ++i;
          ++j;
        }
      }
    }
  }
  return triangles;
}

std::uint64_t triangle_count(const Graph& g) {
  const auto tri = per_node_triangles(g);
  std::uint64_t total = 0;
  for (const auto t : tri) total += t;
  return total / 3;
}

ClusteringReport average_clustering_exact(const Graph& g, bool keep_per_node) {
  const NodeId n = g.node_count();
  ClusteringReport report;
  report.node_count_used = n;
  if (keep_per_node) report.per_node.reserve(n);

  const auto triangles = per_node_triangles(g);
  KahanSum sum;
  for (NodeId i = 0; i < n; ++i) {
    const double c = clustering_from_counts(2 * triangles[i], g.degree(i));
    sum.add(c);
    if (keep_per_node) report.per_node.push_back(c);
  }
  report.average = n > 0 ? sum.value() / static_cast<double>(n) : 0.0;
  return report;
}

ClusteringReport average_clustering_sampled(const Graph& g, std::uint32_t sample_size,
                                            std::uint64_t seed) {
  const NodeId n = g.node_count();
  if (sample_size < 1 || sample_size > n)
    throw std::invalid_argument("sample size " + std::to_string(sample_size) +
                                " out of range [1, " + std::to_string(n) + "]");

  // Floyd's subset sampling: uniform without replacement.
  SplitMix64 rng(derive_stream(seed, kSampleStream));
  std::unordered_set<NodeId> chosen;
  chosen.reserve(sample_size * 2);
  for (std::uint64_t j = n - sample_size; j < n; ++j) {
    const auto t = static_cast<NodeId>(rng.next_below(j + 1));
    if (!chosen.insert(t).second) chosen.insert(static_cast<NodeId>(j));
  }
  std::vector<NodeId> ids(chosen.begin(), chosen.end());
  std::sort(ids.begin(), ids.end());

  KahanSum sum;
  for (const NodeId i : ids) sum.add(local_clustering(g, i));

  ClusteringReport report;
  report.sampled = true;
  report.node_count_used = sample_size;
  report.sample_size = sample_size;
  report.seed = seed;
  report.average = sum.value() / static_cast<double>(sample_size);
  return report;
}

std::uint32_t max_degree(const Graph& g) {
  std::uint32_t best = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) best = std::max(best, g.degree(u));
  return best;
}

}  // namespace trilink
