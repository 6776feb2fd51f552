#include "trilink/predictors.hpp"

#include <cmath>
#include <stdexcept>

namespace trilink {

namespace {

void check_pair(const Graph& g, NodeId i, NodeId j) {
  if (i == j) throw std::invalid_argument("pair scores are undefined for i == j");
  // degree() performs the range check.
  (void)g.degree(i);
  (void)g.degree(j);
}

double abs_degree_difference(const Graph& g, NodeId i, NodeId j) {
  return std::abs(static_cast<double>(g.degree(i)) - static_cast<double>(g.degree(j)));
}

}  // namespace

void validate_params(const ScoreParams& p) {
  if (!(p.alpha >= 0.0 && p.alpha <= 1.0))
    throw std::invalid_argument("alpha must lie in [0, 1]");
  if (!(p.hoi_epsilon > 0.0)) throw std::invalid_argument("hoi_epsilon must be positive");
}

double score_hei(const Graph& g, NodeId i, NodeId j, const ScoreParams& p) {
  check_pair(g, i, j);
  return std::pow(abs_degree_difference(g, i, j), p.alpha);
}

double score_hoi(const Graph& g, NodeId i, NodeId j, const ScoreParams& p) {
  check_pair(g, i, j);
  return 1.0 / std::pow(abs_degree_difference(g, i, j) + p.hoi_epsilon, p.alpha);
}

double score_jaccard(const Graph& g, NodeId i, NodeId j) {
  check_pair(g, i, j);
  const std::uint64_t common = common_neighbor_count(g, i, j);
  const std::uint64_t united = g.degree(i) + g.degree(j) - common;
  if (united == 0) return 0.0;  // both isolated
  return static_cast<double>(common) / static_cast<double>(united);
}

double score_common_neighbors(const Graph& g, NodeId i, NodeId j) {
  check_pair(g, i, j);
  return static_cast<double>(common_neighbor_count(g, i, j));
}

ScorerKind scorer_kind_from_name(std::string_view name) {
  if (name == "hei") return ScorerKind::hei;
  if (name == "hoi") return ScorerKind::hoi;
  if (name == "jac") return ScorerKind::jac;
  if (name == "cn") return ScorerKind::cn;
  throw std::invalid_argument("unknown scoring method '" + std::string(name) +
                              "' (expected hei, hoi, jac or cn)");
}

std::string_view scorer_name(ScorerKind kind) {
  switch (kind) {
    case ScorerKind::hei: return "hei";
    case ScorerKind::hoi: return "hoi";
    case ScorerKind::jac: return "jac";
    case ScorerKind::cn: return "cn";
  }
  return "?";
}

double Scorer::operator()(const Graph& g, NodeId i, NodeId j) const {
  switch (kind) {
    case ScorerKind::hei: return score_hei(g, i, j, params);
    case ScorerKind::hoi: return score_hoi(g, i, j, params);
    case ScorerKind::jac: return score_jaccard(g, i, j);
    case ScorerKind::cn: return score_common_neighbors(g, i, j);
  }
  throw std::logic_error("unreachable scorer kind");
}

ScoreFn Scorer::bind(const Graph& g) const {
  validate_params(params);
  return [this_copy = *this, &g](NodeId i, NodeId j) { return this_copy(g, i, j); };
}

}  // namespace trilink
