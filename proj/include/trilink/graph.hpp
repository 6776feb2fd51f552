#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace trilink {

using NodeId = std::uint32_t;

/// Unordered node pair; canonical form is first < second.
using Edge = std::pair<NodeId, NodeId>;

inline Edge canonical_edge(NodeId u, NodeId v) { return u < v ? Edge{u, v} : Edge{v, u}; }

struct BuildStats {
  std::uint64_t dropped_self_loops = 0;
  std::uint64_t dropped_duplicates = 0;
};

/// Immutable undirected simple graph in CSR form.
///
/// Invariants: no self-loops, no parallel edges, every neighbor list is
/// strictly increasing, and adjacency is symmetric. Construction goes
/// through build_graph (repairing) or detail::graph_from_adjacency
/// (trusted). Once built, a Graph is safe for any number of concurrent
/// readers.
class Graph {
 public:
  Graph() = default;

  NodeId node_count() const { return node_count_; }
  std::uint64_t edge_count() const { return adjacency_.size() / 2; }

  std::uint32_t degree(NodeId u) const {
    check_node(u);
    return static_cast<std::uint32_t>(offsets_[u + 1] - offsets_[u]);
  }

  /// Sorted neighbor ids of u.
  std::span<const NodeId> neighbors(NodeId u) const {
    check_node(u);
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }

  /// Unordered membership test, O(log deg). has_edge(u, u) is always false.
  bool has_edge(NodeId u, NodeId v) const;

  /// Canonical edge list: pairs with u < v in ascending lexicographic order.
  std::vector<Edge> edges() const;

  /// Visits each edge once as (u, v) with u < v, ascending lexicographic.
  template <class Fn>
  void for_each_edge(Fn&& fn) const {
    for (NodeId u = 0; u < node_count_; ++u) {
      for (std::uint64_t p = offsets_[u]; p < offsets_[u + 1]; ++p) {
        const NodeId v = adjacency_[p];
        if (v > u) fn(u, v);
      }
    }
  }

  bool operator==(const Graph&) const = default;

 private:
  friend struct GraphAccess;

  void check_node(NodeId u) const;

  NodeId node_count_ = 0;
  std::vector<std::uint64_t> offsets_;  // size node_count_ + 1
  std::vector<NodeId> adjacency_;       // per-node sorted runs
};

struct BuildResult {
  Graph graph;
  BuildStats stats;
};

/// Builds a Graph from a raw edge list. Self-loops are dropped and
/// duplicates (including reversed ones) collapsed; both are counted in
/// stats rather than rejected, since real edge-list dumps contain them.
/// An id outside [0, node_count) raises std::invalid_argument naming the
/// offending entry index.
BuildResult build_graph(NodeId node_count, std::span<const Edge> edge_list);

/// |Γ(u) ∩ Γ(v)| by sorted-list intersection, O(deg(u) + deg(v)).
std::uint64_t common_neighbor_count(const Graph& g, NodeId u, NodeId v);

namespace detail {
/// Builds from adjacency the caller guarantees to be simple and symmetric
/// (lists may be unsorted; they are sorted here). No repair, no counters.
Graph graph_from_adjacency(std::vector<std::vector<NodeId>>&& adjacency);
}  // namespace detail

}  // namespace trilink
