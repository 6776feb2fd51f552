#include "trilink/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace trilink {

void Graph::check_node(NodeId u) const {
  if (u >= node_count_)
    throw std::out_of_range("node id " + std::to_string(u) + " out of range [0, " +
                            std::to_string(node_count_) + ")");
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  if (u == v) return false;
  // Search the shorter list.
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for_each_edge([&](NodeId u, NodeId v) { out.emplace_back(u, v); });
  return out;
}

std::uint64_t common_neighbor_count(const Graph& g, NodeId u, NodeId v) {
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(v);
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

namespace {

struct GraphParts {
  NodeId node_count = 0;
  std::vector<std::uint64_t> offsets;
  std::vector<NodeId> adjacency;
};

}  // namespace

// Private-member access for the two construction paths in this TU.
struct GraphAccess {
  static Graph make(GraphParts&& parts) {
    Graph g;
    g.node_count_ = parts.node_count;
    g.offsets_ = std::move(parts.offsets);
    g.adjacency_ = std::move(parts.adjacency);
    return g;
  }
};

BuildResult build_graph(NodeId node_count, std::span<const Edge> edge_list) {
  BuildResult result;
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (std::size_t idx = 0; idx < edge_list.size(); ++idx) {
    const auto [u, v] = edge_list[idx];
    if (u >= node_count || v >= node_count)
      throw std::invalid_argument("edge " + std::to_string(idx) + ": node id " +
                                  std::to_string(u >= node_count ? u : v) +
                                  " out of range [0, " + std::to_string(node_count) + ")");
    if (u == v) {
      ++result.stats.dropped_self_loops;
      continue;
    }
    edges.push_back(canonical_edge(u, v));
  }
  std::sort(edges.begin(), edges.end());
  const auto last = std::unique(edges.begin(), edges.end());
  result.stats.dropped_duplicates = static_cast<std::uint64_t>(edges.end() - last);
  edges.erase(last, edges.end());

  GraphParts parts;
  parts.node_count = node_count;
  parts.offsets.assign(static_cast<std::size_t>(node_count) + 1, 0);
  for (const auto& [u, v] : edges) {
    ++parts.offsets[u + 1];
    ++parts.offsets[v + 1];
  }
  for (std::size_t i = 1; i < parts.offsets.size(); ++i) parts.offsets[i] += parts.offsets[i - 1];
  parts.adjacency.resize(edges.size() * 2);
  std::vector<std::uint64_t> cursor(parts.offsets.begin(), parts.offsets.end() - 1);
  // Edges are sorted by (u, v) with u < v, so writing the below-diagonal
  // entries first keeps every run ascending.
  for (const auto& [u, v] : edges) parts.adjacency[cursor[v]++] = u;
  for (const auto& [u, v] : edges) parts.adjacency[cursor[u]++] = v;

  result.graph = GraphAccess::make(std::move(parts));
  return result;
}

namespace detail {

Graph graph_from_adjacency(std::vector<std::vector<NodeId>>&& adjacency) {
  GraphParts parts;
  parts.node_count = static_cast<NodeId>(adjacency.size());
  parts.offsets.assign(adjacency.size() + 1, 0);
  std::uint64_t total = 0;
  for (std::size_t u = 0; u < adjacency.size(); ++u) {
    total += adjacency[u].size();
    parts.offsets[u + 1] = total;
  }
  parts.adjacency.resize(total);
  for (std::size_t u = 0; u < adjacency.size(); ++u) {
    auto& list = adjacency[u];
    std::sort(list.begin(), list.end());
    std::copy(list.begin(), list.end(), parts.adjacency.begin() + parts.offsets[u]);
    list.clear();
    list.shrink_to_fit();
  }
  return GraphAccess::make(std::move(parts));
}

}  // namespace detail

}  // namespace trilink
