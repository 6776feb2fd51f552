#include <random>
#include <stdexcept>

#include "doctest.h"
#include "test_support.hpp"
#include "trilink/generate.hpp"
#include "trilink/metrics.hpp"

using namespace trilink;

TEST_CASE("local clustering on fixtures") {
  const auto k3 = support::complete_graph(3);
  for (NodeId i = 0; i < 3; ++i) CHECK(local_clustering(k3, i) == 1.0);

  const auto path = support::path_graph(3);
  CHECK(local_clustering(path, 1) == 0.0);  // open triplet
  CHECK(local_clustering(path, 0) == 0.0);  // degree 1

  CHECK_THROWS_AS(local_clustering(path, 5), std::out_of_range);
}

TEST_CASE("exact average on fixtures") {
  CHECK(average_clustering_exact(support::complete_graph(5)).average == 1.0);
  CHECK(average_clustering_exact(generate_ba_tree(500, 2)).average == 0.0);

  const auto report = average_clustering_exact(support::complete_graph(4), true);
  CHECK(report.node_count_used == 4);
  CHECK(report.per_node == std::vector<double>{1.0, 1.0, 1.0, 1.0});
  CHECK_FALSE(report.sampled);
}

TEST_CASE("exact average matches brute-force triple enumeration") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const NodeId n = 3 + static_cast<NodeId>(rng() % 38);
    const double density = 0.05 + 0.85 * (trial / 59.0);
    const auto edges = support::random_edges(n, density, rng);
    const auto g = support::make_graph(n, edges);
    const auto adj = support::adjacency_sets(n, edges);
    CHECK(average_clustering_exact(g).average ==
          doctest::Approx(support::brute_average_clustering(adj)).epsilon(1e-12));
  }
}

TEST_CASE("per-node triangle counts match brute force") {
  std::mt19937_64 rng(29);
  const NodeId n = 30;
  const auto edges = support::random_edges(n, 0.3, rng);
  const auto g = support::make_graph(n, edges);
  const auto adj = support::adjacency_sets(n, edges);
  const auto tri = per_node_triangles(g);
  std::uint64_t total = 0;
  for (NodeId i = 0; i < n; ++i) {
    CHECK(tri[i] == support::brute_triangles_at(adj, i));
    total += tri[i];
  }
  CHECK(triangle_count(g) == total / 3);
}

TEST_CASE("sampling the whole node set reproduces the exact average bitwise") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const NodeId n = 10 + static_cast<NodeId>(rng() % 60);
    const auto g = support::make_graph(n, support::random_edges(n, 0.2, rng));
    const double exact = average_clustering_exact(g).average;
    const double sampled = average_clustering_sampled(g, n, 999).average;
    CHECK(exact == sampled);
  }
  const auto dense = generate_graph({4000, 0.5, 1e-9, 8});
  CHECK(average_clustering_exact(dense).average ==
        average_clustering_sampled(dense, 4000, 0).average);
}

TEST_CASE("sampled mode validates its size and reports it") {
  const auto g = support::complete_graph(10);
  CHECK_THROWS_AS(average_clustering_sampled(g, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(average_clustering_sampled(g, 11, 1), std::invalid_argument);

  const auto report = average_clustering_sampled(g, 4, 7);
  CHECK(report.sampled);
  CHECK(report.sample_size == 4);
  CHECK(report.node_count_used == 4);
  CHECK(report.average == 1.0);
  // same seed, same answer
  CHECK(average_clustering_sampled(g, 4, 7).average == report.average);
}

TEST_CASE("closing a triangle never lowers endpoint triangle counts") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const NodeId n = 12;
    auto edges = support::random_edges(n, 0.3, rng);
    const auto g = support::make_graph(n, edges);

    // find a non-edge with at least one common neighbor
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (g.has_edge(u, v) || common_neighbor_count(g, u, v) == 0) continue;
        auto grown = edges;
        grown.emplace_back(u, v);
        const auto g2 = support::make_graph(n, grown);
        const auto before = per_node_triangles(g);
        const auto after = per_node_triangles(g2);
        CHECK(after[u] > before[u]);
        CHECK(after[v] > before[v]);
        for (NodeId w = 0; w < n; ++w) CHECK(after[w] >= before[w]);
        goto next_trial;
      }
    }
  next_trial:;
  }
}

TEST_CASE("degenerate graphs") {
  const auto empty = support::make_graph(5, {});
  CHECK(average_clustering_exact(empty).average == 0.0);
  CHECK(triangle_count(empty) == 0);
  CHECK(max_degree(empty) == 0);
  CHECK(max_degree(support::star_graph(9)) == 9);
}
