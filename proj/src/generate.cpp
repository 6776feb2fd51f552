#include "trilink/generate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trilink {

namespace {

constexpr std::uint64_t kTreeStream = 0x626174726565ull;     // "batree"
constexpr std::uint64_t kDensifyStream = 0x64656e73696679ull;  // "densify"

// Weighted draw over z's neighbors. Degree and exclusion predicates are
// injected so the same selection runs against an immutable Graph and
// against the evolving adjacency inside densify.
template <class DegreeFn, class ExcludedFn>
std::optional<NodeId> pick_partner(std::span<const NodeId> gamma_z, double deg_i,
                                   DegreeFn&& degree_of, ExcludedFn&& excluded, double epsilon,
                                   SplitMix64& rng,
                                   std::vector<std::pair<NodeId, double>>& scratch) {
  scratch.clear();
  double total = 0.0;
  for (const NodeId j : gamma_z) {
    if (excluded(j)) continue;
    const double w = std::abs(deg_i - degree_of(j)) + epsilon;
    scratch.emplace_back(j, w);
    total += w;
  }
  if (scratch.empty()) return std::nullopt;

  const double target = rng.next_double() * total;
  double acc = 0.0;
  for (const auto& [j, w] : scratch) {
    acc += w;
    if (target < acc) return j;
  }
  return scratch.back().first;  // rounding pushed target to the end
}

}  // namespace

void validate_config(const GeneratorConfig& cfg) {
  if (cfg.n < 2) throw std::invalid_argument("generator needs n >= 2, got " + std::to_string(cfg.n));
  if (!(cfg.d >= 0.0 && cfg.d <= 1.0))
    throw std::invalid_argument("closure probability d must lie in [0, 1]");
  if (!(cfg.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
}

Graph generate_ba_tree(std::uint32_t n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("tree needs n >= 2, got " + std::to_string(n));

  SplitMix64 rng(derive_stream(seed, kTreeStream));

  // parent[t] is the node t attached to. Sampling from an array holding
  // each id once per unit of degree realizes attachment probability
  // deg(i) / sum of degrees over the graph as it stands when t arrives.
  std::vector<NodeId> parent(n, 0);
  std::vector<NodeId> repeats;
  repeats.reserve(2 * (static_cast<std::size_t>(n) - 1));
  repeats.push_back(0);
  repeats.push_back(1);
  for (NodeId t = 2; t < n; ++t) {
    const NodeId p = repeats[rng.next_below(repeats.size())];
    parent[t] = p;
    repeats.push_back(p);
    repeats.push_back(t);
  }

  // parent[t] < t always, so filling in ascending t keeps every run sorted:
  // a node's own parent lands before its children.
  std::vector<std::uint32_t> degree(n, 0);
  for (NodeId t = 1; t < n; ++t) {
    ++degree[t];
    ++degree[parent[t]];
  }
  std::vector<std::vector<NodeId>> adjacency(n);
  for (NodeId u = 0; u < n; ++u) adjacency[u].reserve(degree[u]);
  for (NodeId t = 1; t < n; ++t) {
    adjacency[parent[t]].push_back(t);
    adjacency[t].push_back(parent[t]);
  }
  return detail::graph_from_adjacency(std::move(adjacency));
}

std::optional<NodeId> select_triangle_partner(const Graph& g, NodeId i, NodeId z, double epsilon,
                                              SplitMix64& rng) {
  if (!g.has_edge(i, z))
    throw std::invalid_argument("triangle partner selection requires z in the neighborhood of i");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");

  std::vector<std::pair<NodeId, double>> scratch;
  const double deg_i = static_cast<double>(g.degree(i));
  return pick_partner(
      g.neighbors(z), deg_i, [&](NodeId j) { return static_cast<double>(g.degree(j)); },
      [&](NodeId j) { return j == i || g.has_edge(i, j); }, epsilon, rng, scratch);
}

Graph densify(const Graph& tree, const GeneratorConfig& cfg) {
  validate_config(cfg);
  const NodeId n = tree.node_count();

  std::vector<std::vector<NodeId>> adj(n);
  for (NodeId u = 0; u < n; ++u) {
    const auto nb = tree.neighbors(u);
    adj[u].reserve(nb.size() + 2);
    adj[u].assign(nb.begin(), nb.end());
  }

  SplitMix64 rng(derive_stream(cfg.seed, kDensifyStream));
  std::vector<std::uint8_t> adjacent_to_i(n, 0);
  std::vector<NodeId> snapshot;
  std::vector<std::pair<NodeId, double>> scratch;

  for (NodeId i = 0; i < n; ++i) {
    snapshot.assign(adj[i].begin(), adj[i].end());
    if (snapshot.empty()) continue;

    adjacent_to_i[i] = 1;
    for (const NodeId v : snapshot) adjacent_to_i[v] = 1;

    for (const NodeId z : snapshot) {
      if (rng.next_double() >= cfg.d) continue;
      const double deg_i = static_cast<double>(adj[i].size());
      const auto j = pick_partner(
          adj[z], deg_i, [&](NodeId c) { return static_cast<double>(adj[c].size()); },
          [&](NodeId c) { return adjacent_to_i[c] != 0; }, cfg.epsilon, rng, scratch);
      if (!j) continue;
      adj[i].push_back(*j);
      adj[*j].push_back(i);
      adjacent_to_i[*j] = 1;
    }

    adjacent_to_i[i] = 0;
    for (const NodeId v : adj[i]) adjacent_to_i[v] = 0;
  }

  return detail::graph_from_adjacency(std::move(adj));
}

Graph generate_graph(const GeneratorConfig& cfg) {
  validate_config(cfg);
  return densify(generate_ba_tree(cfg.n, cfg.seed), cfg);
}

}  // namespace trilink
