#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "trilink/graph.hpp"

namespace trilink {

struct ScoreParams {
  double alpha = 0.5;         // degree-difference exponent, in [0, 1]
  double hoi_epsilon = 1e-9;  // zero-difference guard for the homogeneity score
};

void validate_params(const ScoreParams& p);

/// |deg(i) - deg(j)|^alpha — rewards degree heterogeneity.
double score_hei(const Graph& g, NodeId i, NodeId j, const ScoreParams& p);

/// 1 / (|deg(i) - deg(j)| + epsilon)^alpha — rewards degree homogeneity;
/// equal-degree pairs share one large finite score.
double score_hoi(const Graph& g, NodeId i, NodeId j, const ScoreParams& p);

/// |Γ(i) ∩ Γ(j)| / |Γ(i) ∪ Γ(j)|; 0 when both nodes are isolated.
double score_jaccard(const Graph& g, NodeId i, NodeId j);

/// |Γ(i) ∩ Γ(j)| as a real.
double score_common_neighbors(const Graph& g, NodeId i, NodeId j);

enum class ScorerKind { hei, hoi, jac, cn };

ScorerKind scorer_kind_from_name(std::string_view name);
std::string_view scorer_name(ScorerKind kind);

/// Bound pair-scoring callable. Scores read nothing but the graph they
/// were bound to, so binding to a training graph keeps held-out edges out
/// of every score by construction.
using ScoreFn = std::function<double(NodeId, NodeId)>;

/// Uniform interface over the four scores.
struct Scorer {
  ScorerKind kind = ScorerKind::jac;
  ScoreParams params;

  double operator()(const Graph& g, NodeId i, NodeId j) const;

  /// Binds to g; the graph must outlive the returned callable.
  ScoreFn bind(const Graph& g) const;
};

}  // namespace trilink
