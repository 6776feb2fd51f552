#pragma once

#include <cstdint>
#include <vector>

#include "trilink/graph.hpp"
#include "trilink/predictors.hpp"

namespace trilink {

/// Partition of an observed edge set into training structure and held-out
/// positives. Invariant: no positive is present in train_graph, and train
/// edges plus positives reconstitute the observed set exactly.
struct EdgeSplit {
  Graph train_graph;
  std::vector<Edge> positives;  // canonical pairs, ascending
  double ratio = 0.0;           // |positives| / |observed edges|
  std::uint64_t seed = 0;
};

/// Uniformly random split holding out ceil(ratio * |E|) edges.
/// Deterministic given seed. Throws when either side would be empty.
EdgeSplit split_edges(const Graph& g, double ratio, std::uint64_t seed);

/// Wraps externally supplied held-out positives around a training graph.
/// Every positive must be absent from the training structure.
EdgeSplit make_external_split(Graph train_graph, std::vector<Edge> positives);

/// `count` unordered non-adjacent distinct pairs, drawn uniformly with
/// replacement across draws by rejection against has_edge. Throws on a
/// complete graph and on density > 0.99 of complete.
std::vector<Edge> sample_negatives(const Graph& g, std::uint64_t count, std::uint64_t seed);

struct AucResult {
  std::uint64_t m = 0;         // comparisons performed
  std::uint64_t m_strict = 0;  // positive scored strictly higher
  std::uint64_t m_tie = 0;     // scores tied
  double auc = 0.0;            // (m_strict + m_tie / 2) / m
};

AucResult auc_from_counts(std::uint64_t m, std::uint64_t m_strict, std::uint64_t m_tie);

/// Floating-point tie rule used for the tie tally:
/// |a - b| <= 1e-12 * max(1, |a|, |b|). Integer-valued scores tie exactly.
bool scores_tie(double a, double b);

/// Sampled ranking quality: m independent comparisons, each drawing one
/// held-out positive and one non-edge of the full observed graph (training
/// edges plus positives), scored by `score`. Draw t reads its own seeded
/// substream, so results do not depend on how comparisons are scheduled.
AucResult auc(const ScoreFn& score, const EdgeSplit& split, std::uint64_t m, std::uint64_t seed);
AucResult auc(const Scorer& scorer, const EdgeSplit& split, std::uint64_t m, std::uint64_t seed);

/// Same estimator, but negatives come uniformly from a fixed pre-sampled
/// pool instead of rejection sampling (benchmark-style fixed negatives).
AucResult auc_with_pool(const ScoreFn& score, const EdgeSplit& split,
                        std::span<const Edge> negative_pool, std::uint64_t m, std::uint64_t seed);

struct HitsResult {
  std::uint64_t k = 0;
  double hits = 0.0;  // fraction of positives above the k-th best negative
};

/// Scores all positives and all negatives; the threshold is the k-th
/// largest negative score and only strictly greater positives count.
HitsResult hits_at_k(const ScoreFn& score, const EdgeSplit& split,
                     std::span<const Edge> negatives, std::uint64_t k);
HitsResult hits_at_k(const Scorer& scorer, const EdgeSplit& split,
                     std::span<const Edge> negatives, std::uint64_t k);

}  // namespace trilink
