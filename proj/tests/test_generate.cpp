#include <map>
#include <stdexcept>

#include "doctest.h"
#include "test_support.hpp"
#include "trilink/generate.hpp"
#include "trilink/metrics.hpp"
#include "trilink/rng.hpp"

using namespace trilink;

TEST_CASE("two-node tree is the forced initial edge") {
  for (std::uint64_t seed : {0ull, 1ull, 42ull, 12345ull}) {
    const auto g = generate_ba_tree(2, seed);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}});
  }
  CHECK_THROWS_AS(generate_ba_tree(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(generate_ba_tree(0, 0), std::invalid_argument);
}

TEST_CASE("trees are connected, have n-1 edges and no triangles") {
  const auto g = generate_ba_tree(10000, 7);
  CHECK(g.edge_count() == 9999);
  CHECK(support::connected(g));
  CHECK(support::well_formed(g));
  CHECK(triangle_count(g) == 0);
}

TEST_CASE("third node attaches to either founder with equal probability") {
  int to_zero = 0;
  const int trials = 100000;
  for (int seed = 0; seed < trials; ++seed) {
    const auto g = generate_ba_tree(3, static_cast<std::uint64_t>(seed));
    if (g.has_edge(0, 2)) {
      ++to_zero;
    } else {
      REQUIRE(g.has_edge(1, 2));
    }
  }
  const double freq = static_cast<double>(to_zero) / trials;
  CHECK(std::abs(freq - 0.5) < 0.01);
}

namespace {

// i = 0 has degree 5; z = 1 offers candidates 2, 3, 4 of degrees 1, 3, 5,
// none adjacent to i.
Graph partner_fixture() {
  std::vector<Edge> edges = {{0, 1}, {0, 5}, {0, 6}, {0, 7}, {0, 8},   // deg(0) = 5
                             {1, 2}, {1, 3}, {1, 4},                   // candidates
                             {3, 9}, {3, 10},                          // deg(3) = 3
                             {4, 11}, {4, 12}, {4, 13}, {4, 14}};      // deg(4) = 5
  return support::make_graph(15, edges);
}

}  // namespace

TEST_CASE("partner selection follows the degree-difference weights") {
  const auto g = partner_fixture();
  REQUIRE(g.degree(0) == 5);
  REQUIRE(g.degree(2) == 1);
  REQUIRE(g.degree(3) == 3);
  REQUIRE(g.degree(4) == 5);

  SplitMix64 rng(99);
  std::map<NodeId, int> counts;
  const int trials = 100000;
  for (int t = 0; t < trials; ++t) {
    const auto j = select_triangle_partner(g, 0, 1, 1e-9, rng);
    REQUIRE(j.has_value());
    ++counts[*j];
  }
  // weights 4+eps, 2+eps, eps -> probabilities 2/3, 1/3, ~0
  CHECK(std::abs(counts[2] / double(trials) - 2.0 / 3.0) < 0.01);
  CHECK(std::abs(counts[3] / double(trials) - 1.0 / 3.0) < 0.01);
  CHECK(counts[4] <= 5);
}

TEST_CASE("partner selection with no eligible candidate yields nothing") {
  // Γ(1) = {0} only.
  const auto g = support::make_graph(3, {{0, 1}, {0, 2}});
  SplitMix64 rng(1);
  CHECK_FALSE(select_triangle_partner(g, 0, 1, 1e-9, rng).has_value());
}

TEST_CASE("equal degree differences fall back to a uniform draw") {
  // deg(0) = 2; candidates 2, 3, 4 all have degree 2.
  const auto g = support::make_graph(
      9, {{0, 1}, {0, 8}, {1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}});
  REQUIRE(g.degree(0) == 2);
  for (NodeId c : {2u, 3u, 4u}) REQUIRE(g.degree(c) == 2);

  SplitMix64 rng(5);
  std::map<NodeId, int> counts;
  const int trials = 100000;
  for (int t = 0; t < trials; ++t) {
    const auto j = select_triangle_partner(g, 0, 1, 1e-9, rng);
    REQUIRE(j.has_value());
    ++counts[*j];
  }
  for (NodeId c : {2u, 3u, 4u})
    CHECK(std::abs(counts[c] / double(trials) - 1.0 / 3.0) < 0.01);
}

TEST_CASE("partner selection rejects a z outside the neighborhood") {
  const auto g = support::path_graph(4);
  SplitMix64 rng(1);
  CHECK_THROWS_AS(select_triangle_partner(g, 0, 2, 1e-9, rng), std::invalid_argument);
}

TEST_CASE("d = 0 leaves the tree untouched") {
  const auto tree = generate_ba_tree(5000, 3);
  const auto out = densify(tree, {5000, 0.0, 1e-9, 3});
  CHECK(out == tree);
  CHECK(average_clustering_exact(out).average == 0.0);
}

TEST_CASE("d = 1 on a path closes its only triangle") {
  const auto path = support::path_graph(3);
  const auto out = densify(path, {3, 1.0, 1e-9, 11});
  const std::vector<Edge> expected = {{0, 1}, {0, 2}, {1, 2}};
  CHECK(out.edges() == expected);
}

TEST_CASE("densification is deterministic in the full config") {
  const GeneratorConfig cfg{3000, 0.5, 1e-9, 17};
  const auto a = generate_graph(cfg);
  const auto b = generate_graph(cfg);
  CHECK(a == b);

  GeneratorConfig different = cfg;
  different.seed = 18;
  CHECK(generate_graph(different) != a);
}

TEST_CASE("densified output contains the tree and only triangle-closing additions") {
  const auto tree = generate_ba_tree(3000, 23);
  const auto out = densify(tree, {3000, 0.6, 1e-9, 23});
  CHECK(support::well_formed(out));
  CHECK(out.edge_count() >= tree.edge_count());

  tree.for_each_edge([&](NodeId u, NodeId v) { CHECK(out.has_edge(u, v)); });
  // Every added edge had a shared neighbor at insertion time; edges are
  // never removed, so that witness is still present.
  out.for_each_edge([&](NodeId u, NodeId v) {
    if (!tree.has_edge(u, v)) CHECK(common_neighbor_count(out, u, v) >= 1);
  });
}

TEST_CASE("mean clustering never drops as d rises") {
  const std::vector<double> grid = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
  const std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  double previous = -1.0;
  for (const double d : grid) {
    double mean = 0.0;
    for (const auto seed : seeds)
      mean += average_clustering_exact(generate_graph({2000, d, 1e-9, seed})).average;
    mean /= static_cast<double>(seeds.size());
    CHECK(mean >= previous - 0.01);
    previous = mean;
  }
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(validate_config({1, 0.5, 1e-9, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_config({10, -0.1, 1e-9, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_config({10, 1.1, 1e-9, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_config({10, 0.5, 0.0, 0}), std::invalid_argument);
  CHECK_NOTHROW(validate_config({2, 0.0, 1e-9, 0}));
}
