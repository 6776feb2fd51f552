#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trilink/eval.hpp"
#include "trilink/graph.hpp"
#include "trilink/predictors.hpp"

namespace trilink {

/// Average-clustering band separating the two predictor regimes. Below
/// `lower` degree-dependent scores are expected to win, above `upper`
/// common-neighbor scores; in between the contest is too close to call.
struct BoundaryConfig {
  double lower = 0.27;
  double upper = 0.37;
};

enum class Regime { degree_dependent, common_neighbor, ambiguous };

std::string_view regime_name(Regime r);

struct Recommendation {
  Regime regime = Regime::ambiguous;
  double avcc = 0.0;
  std::optional<Scorer> chosen;                            // filled by auto_select
  std::vector<std::pair<std::string, double>> validation_auc;  // method -> AUC
};

/// Pure classification of a measured average clustering coefficient.
Recommendation recommend(double avcc, const BoundaryConfig& cfg = {});

/// Measures the average clustering coefficient of g, classifies it, and
/// resolves the concrete method on a validation split carved from g (the
/// caller's training edges) — held-out test edges are never touched.
/// Degree-dependent regime picks the better of hei/hoi on validation,
/// common-neighbor picks jac, ambiguous picks the best of all candidates.
/// validation_auc reports every evaluated method.
Recommendation auto_select(const Graph& g, const BoundaryConfig& cfg, double val_ratio,
                           std::uint64_t m, std::uint64_t seed, const ScoreParams& params = {});

}  // namespace trilink
