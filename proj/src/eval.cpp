#include "trilink/eval.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "trilink/rng.hpp"

namespace trilink {

namespace {

constexpr std::uint64_t kSplitStream = 0x73706c6974ull;      // "split"
constexpr std::uint64_t kNegativeStream = 0x6e656761ull;     // "nega"

std::uint64_t encode_pair(Edge e) {
  return (static_cast<std::uint64_t>(e.first) << 32) | e.second;
}

// ceil(ratio * count) with a relative guard so binary noise in the product
// (0.1 * 100 = 10.000000000000002) cannot bump the result.
std::uint64_t held_out_count(double ratio, std::uint64_t count) {
  const double v = ratio * static_cast<double>(count);
  return static_cast<std::uint64_t>(std::ceil(v - 1e-9 * std::max(1.0, v)));
}

struct NegativeSampler {
  NodeId n;
  std::function<bool(NodeId, NodeId)> is_edge;

  Edge draw(SplitMix64& rng) const {
    for (int attempt = 0; attempt < 10000; ++attempt) {
      const auto u = static_cast<NodeId>(rng.next_below(n));
      const auto v = static_cast<NodeId>(rng.next_below(n));
      if (u == v || is_edge(u, v)) continue;
      return canonical_edge(u, v);
    }
    throw std::runtime_error("negative sampling exceeded its rejection bound");
  }
};

void check_negative_sampling_feasible(NodeId n, std::uint64_t observed_edges) {
  if (n < 2) throw std::invalid_argument("graph has no node pairs to sample from");
  const auto total_pairs =
      static_cast<unsigned __int128>(n) * (static_cast<unsigned __int128>(n) - 1) / 2;
  if (static_cast<unsigned __int128>(observed_edges) >= total_pairs)
    throw std::invalid_argument("graph is complete: no non-edges exist");
  const double density = static_cast<double>(observed_edges) / static_cast<double>(total_pairs);
  if (density > 0.99)
    throw std::runtime_error("graph density " + std::to_string(density) +
                             " exceeds 0.99 of complete; rejection sampling would stall");
}

}  // namespace

EdgeSplit split_edges(const Graph& g, double ratio, std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio < 1.0)) throw std::invalid_argument("split ratio must lie in (0, 1)");
  const std::uint64_t total = g.edge_count();
  if (total < 2) throw std::invalid_argument("split needs at least 2 edges");

  const std::uint64_t held = held_out_count(ratio, total);
  if (held == 0 || held >= total)
    throw std::invalid_argument("ratio " + std::to_string(ratio) + " leaves an empty side of a " +
                                std::to_string(total) + "-edge split");

  auto edges = g.edges();
  SplitMix64 rng(derive_stream(seed, kSplitStream));
  for (std::uint64_t t = 0; t < held; ++t) {
    const std::uint64_t pick = t + rng.next_below(total - t);
    std::swap(edges[t], edges[pick]);
  }

  EdgeSplit split;
  split.ratio = ratio;
  split.seed = seed;
  split.positives.assign(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(held));
  std::sort(split.positives.begin(), split.positives.end());
  const std::span<const Edge> rest{edges.data() + held, edges.size() - held};
  split.train_graph = build_graph(g.node_count(), rest).graph;
  return split;
}

EdgeSplit make_external_split(Graph train_graph, std::vector<Edge> positives) {
  if (positives.empty()) throw std::invalid_argument("external split has no positives");
  for (auto& e : positives) {
    e = canonical_edge(e.first, e.second);
    if (train_graph.has_edge(e.first, e.second))
      throw std::invalid_argument("held-out positive (" + std::to_string(e.first) + ", " +
                                  std::to_string(e.second) + ") is present in the training graph");
  }
  std::sort(positives.begin(), positives.end());
  EdgeSplit split;
  split.ratio = static_cast<double>(positives.size()) /
                static_cast<double>(train_graph.edge_count() + positives.size());
  split.train_graph = std::move(train_graph);
  split.positives = std::move(positives);
  return split;
}

std::vector<Edge> sample_negatives(const Graph& g, std::uint64_t count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("negative sample count must be positive");
  check_negative_sampling_feasible(g.node_count(), g.edge_count());
  const NegativeSampler sampler{g.node_count(),
                                [&](NodeId u, NodeId v) { return g.has_edge(u, v); }};
  SplitMix64 rng(derive_stream(seed, kNegativeStream));
  std::vector<Edge> out;
  out.reserve(count);
  for (std::uint64_t t = 0; t < count; ++t) out.push_back(sampler.draw(rng));
  return out;
}

AucResult auc_from_counts(std::uint64_t m, std::uint64_t m_strict, std::uint64_t m_tie) {
  if (m == 0) throw std::invalid_argument("auc needs at least one comparison");
  if (m_strict + m_tie > m) throw std::invalid_argument("auc counts exceed comparison total");
  AucResult r;
  r.m = m;
  r.m_strict = m_strict;
  r.m_tie = m_tie;
  r.auc = (static_cast<double>(m_strict) + static_cast<double>(m_tie) / 2.0) /
          static_cast<double>(m);
  return r;
}

bool scores_tie(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

namespace {

// Shared comparison loop; draw_negative supplies e2 for comparison t.
template <class DrawNegative>
AucResult auc_impl(const ScoreFn& score, const EdgeSplit& split, std::uint64_t m,
                   std::uint64_t seed, DrawNegative&& draw_negative) {
  if (m < 1) throw std::invalid_argument("auc needs at least one comparison");
  if (split.positives.empty()) throw std::invalid_argument("split has no held-out positives");

  std::uint64_t strict = 0, ties = 0;
  for (std::uint64_t t = 0; t < m; ++t) {
    SplitMix64 rng(derive_stream(seed, t));
    const Edge pos = split.positives[rng.next_below(split.positives.size())];
    const Edge neg = draw_negative(rng);
    const double a = score(pos.first, pos.second);
    const double b = score(neg.first, neg.second);
    if (scores_tie(a, b)) {
      ++ties;
    } else if (a > b) {
      ++strict;
    }
  }
  return auc_from_counts(m, strict, ties);
}

}  // namespace

AucResult auc(const ScoreFn& score, const EdgeSplit& split, std::uint64_t m, std::uint64_t seed) {
  const Graph& train = split.train_graph;
  const std::uint64_t observed = train.edge_count() + split.positives.size();
  check_negative_sampling_feasible(train.node_count(), observed);

  // Membership over the full observed set: training structure plus the
  // held-out positives, so no positive can leak into the negatives.
  std::vector<std::uint64_t> positive_keys;
  positive_keys.reserve(split.positives.size());
  for (const auto& e : split.positives) positive_keys.push_back(encode_pair(e));
  std::sort(positive_keys.begin(), positive_keys.end());

  const NegativeSampler sampler{
      train.node_count(), [&](NodeId u, NodeId v) {
        if (train.has_edge(u, v)) return true;
        return std::binary_search(positive_keys.begin(), positive_keys.end(),
                                  encode_pair(canonical_edge(u, v)));
      }};
  return auc_impl(score, split, m, seed, [&](SplitMix64& rng) { return sampler.draw(rng); });
}

AucResult auc(const Scorer& scorer, const EdgeSplit& split, std::uint64_t m, std::uint64_t seed) {
  return auc(scorer.bind(split.train_graph), split, m, seed);
}

AucResult auc_with_pool(const ScoreFn& score, const EdgeSplit& split,
                        std::span<const Edge> negative_pool, std::uint64_t m, std::uint64_t seed) {
  if (negative_pool.empty()) throw std::invalid_argument("negative pool is empty");
  return auc_impl(score, split, m, seed, [&](SplitMix64& rng) {
    return negative_pool[rng.next_below(negative_pool.size())];
  });
}

HitsResult hits_at_k(const ScoreFn& score, const EdgeSplit& split, std::span<const Edge> negatives,
                     std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("hits@k needs k >= 1");
  if (k > negatives.size())
    throw std::invalid_argument("hits@k needs at least k negatives, got " +
                                std::to_string(negatives.size()));
  if (split.positives.empty()) throw std::invalid_argument("split has no held-out positives");

  std::vector<double> negative_scores;
  negative_scores.reserve(negatives.size());
  for (const auto& e : negatives) negative_scores.push_back(score(e.first, e.second));
  std::nth_element(negative_scores.begin(), negative_scores.begin() + static_cast<std::ptrdiff_t>(k - 1),
                   negative_scores.end(), std::greater<>());
  const double threshold = negative_scores[k - 1];

  std::uint64_t above = 0;
  for (const auto& e : split.positives)
    if (score(e.first, e.second) > threshold) ++above;

  HitsResult r;
  r.k = k;
  r.hits = static_cast<double>(above) / static_cast<double>(split.positives.size());
  return r;
}

HitsResult hits_at_k(const Scorer& scorer, const EdgeSplit& split, std::span<const Edge> negatives,
                     std::uint64_t k) {
  return hits_at_k(scorer.bind(split.train_graph), split, negatives, k);
}

}  // namespace trilink
