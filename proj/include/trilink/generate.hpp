#pragma once

#include <cstdint>
#include <optional>

#include "trilink/graph.hpp"
#include "trilink/rng.hpp"

namespace trilink {

struct GeneratorConfig {
  std::uint32_t n = 2;       // target node count, >= 2
  double d = 0.0;            // triangle-closure probability per (i, z) pair
  double epsilon = 1e-9;     // zero-guard added to every selection weight
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument when n < 2, d outside [0, 1] or epsilon <= 0.
void validate_config(const GeneratorConfig& cfg);

/// Preferential-attachment tree: starts from the single edge (0, 1); each
/// node t >= 2 attaches to an existing node with probability proportional
/// to its current degree. Always returns a connected tree on n nodes.
Graph generate_ba_tree(std::uint32_t n, std::uint64_t seed);

/// Draws a triangle partner for i among z's neighbors: candidates j != i
/// that are not already adjacent to i, weighted by |deg(i) - deg(j)| +
/// epsilon. Empty candidate set yields nullopt. Requires z adjacent to i.
std::optional<NodeId> select_triangle_partner(const Graph& g, NodeId i, NodeId z, double epsilon,
                                              SplitMix64& rng);

/// Triangle-closing densification. For each node i in ascending id order,
/// over a snapshot of i's neighbor list taken when i's turn begins, each
/// neighbor z triggers (with probability d) a weighted partner draw from
/// z's current neighbors; a successful draw adds edge (i, j) immediately,
/// so later weight computations see updated degrees. Never removes edges;
/// d = 0 returns the input unchanged.
Graph densify(const Graph& tree, const GeneratorConfig& cfg);

/// generate_ba_tree + densify under one config.
Graph generate_graph(const GeneratorConfig& cfg);

}  // namespace trilink
