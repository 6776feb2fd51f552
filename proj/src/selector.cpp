#include "trilink/selector.hpp"

#include <stdexcept>

#include "trilink/metrics.hpp"
#include "trilink/rng.hpp"

namespace trilink {

namespace {

constexpr std::uint64_t kValidationSplitStream = 0x76616c73ull;  // "vals"
constexpr std::uint64_t kValidationEvalStream = 0x76616c65ull;   // "vale"

void check_boundary(const BoundaryConfig& cfg) {
  if (!(cfg.lower >= 0.0 && cfg.lower <= cfg.upper && cfg.upper <= 1.0))
    throw std::invalid_argument("boundary must satisfy 0 <= lower <= upper <= 1");
}

}  // namespace

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::degree_dependent: return "DegreeDependent";
    case Regime::common_neighbor: return "CommonNeighbor";
    case Regime::ambiguous: return "Ambiguous";
  }
  return "?";
}

Recommendation recommend(double avcc, const BoundaryConfig& cfg) {
  check_boundary(cfg);
  if (!(avcc >= 0.0 && avcc <= 1.0))
    throw std::invalid_argument("average clustering coefficient must lie in [0, 1]");
  Recommendation rec;
  rec.avcc = avcc;
  if (avcc < cfg.lower) {
    rec.regime = Regime::degree_dependent;
  } else if (avcc > cfg.upper) {
    rec.regime = Regime::common_neighbor;
  } else {
    rec.regime = Regime::ambiguous;
  }
  return rec;
}

Recommendation auto_select(const Graph& g, const BoundaryConfig& cfg, double val_ratio,
                           std::uint64_t m, std::uint64_t seed, const ScoreParams& params) {
  check_boundary(cfg);
  validate_params(params);

  const double avcc = average_clustering_exact(g).average;
  Recommendation rec = recommend(avcc, cfg);

  EdgeSplit validation;
  try {
    validation = split_edges(g, val_ratio, derive_stream(seed, kValidationSplitStream));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("graph too small for a nested validation split: ") +
                                e.what());
  }

  // All four methods are scored on the same validation comparisons; the
  // regime then restricts which of them may be chosen. Near-complete
  // graphs leave no usable negative pool; classification still stands
  // and the regime's default method is chosen.
  const ScorerKind all_kinds[] = {ScorerKind::hei, ScorerKind::hoi, ScorerKind::jac,
                                  ScorerKind::cn};
  const std::uint64_t eval_seed = derive_stream(seed, kValidationEvalStream);
  double best_overall = -1.0, best_degree = -1.0;
  Scorer best_overall_scorer{ScorerKind::jac, params};
  Scorer best_degree_scorer{ScorerKind::hei, params};
  try {
    for (const ScorerKind kind : all_kinds) {
      const Scorer scorer{kind, params};
      const AucResult result = auc(scorer, validation, m, eval_seed);
      rec.validation_auc.emplace_back(std::string(scorer_name(kind)), result.auc);
      if (result.auc > best_overall) {
        best_overall = result.auc;
        best_overall_scorer = scorer;
      }
      if ((kind == ScorerKind::hei || kind == ScorerKind::hoi) && result.auc > best_degree) {
        best_degree = result.auc;
        best_degree_scorer = scorer;
      }
    }
  } catch (const std::runtime_error&) {
    rec.validation_auc.clear();
  }

  switch (rec.regime) {
    case Regime::degree_dependent: rec.chosen = best_degree_scorer; break;
    case Regime::common_neighbor: rec.chosen = Scorer{ScorerKind::jac, params}; break;
    case Regime::ambiguous: rec.chosen = best_overall_scorer; break;
  }
  return rec;
}

}  // namespace trilink
