#include "nbm/neighbor_matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace nbm {

void NMConfig::validate() const {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (max_iterations == 0) throw std::invalid_argument("max_iterations must be positive");
  if (!(density_threshold >= 0.0 && density_threshold <= 1.0))
    throw std::invalid_argument("density threshold must lie in [0,1]");
}

namespace {

bool colors_differ(const DirectedGraph& ga, const DirectedGraph& gb, NodeId i, NodeId j) {
  return ga.colored() && gb.colored() && ga.color(i) != gb.color(j);
}

void check_step_input(const DirectedGraph& ga, const DirectedGraph& gb, const SimilarityMatrix& x) {
  if (x.rows() != ga.node_count() || x.cols() != gb.node_count())
    throw std::invalid_argument("similarity matrix shape does not match the graphs");
  for (double v : x.values())
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("similarity entries must lie in [0,1]");
}

thread_local WeightTable tl_table;

// One in- or out-term of the update rule. `weight` is null for the built-in
// Hungarian solver with shortcuts enabled.
double neighbor_term(std::span<const NodeId> na, std::span<const NodeId> nb, const SimilarityMatrix& x,
                     const MatchingWeightFn* weight) {
  const std::size_t larger = std::max(na.size(), nb.size());
  const std::size_t smaller = std::min(na.size(), nb.size());
  if (larger == 0) return 1.0;
  if (smaller == 0) return 0.0;

  double best = 0.0;
  if (weight == nullptr && na.size() == 1) {
    for (NodeId b : nb) best = std::max(best, x(na[0], b));
  } else if (weight == nullptr && nb.size() == 1) {
    for (NodeId a : na) best = std::max(best, x(a, nb[0]));
  } else {
    tl_table.reshape(na.size(), nb.size());
    for (std::size_t r = 0; r < na.size(); ++r)
      for (std::size_t c = 0; c < nb.size(); ++c) tl_table(r, c) = x(na[r], nb[c]);
    best = weight ? (*weight)(tl_table) : max_assignment_weight(tl_table);
  }
  return best / static_cast<double>(larger);
}

void update_row(const DirectedGraph& ga, const DirectedGraph& gb, const SimilarityMatrix& x_prev, NodeId i,
                const MatchingWeightFn* weight, SimilarityMatrix& out) {
  const auto in_a = ga.in_neighbors(i);
  const auto out_a = ga.out_neighbors(i);
  for (NodeId j = 0; j < gb.node_count(); ++j) {
    if (colors_differ(ga, gb, i, j)) {
      out(i, j) = 0.0;
      continue;
    }
    const double s_in = neighbor_term(in_a, gb.in_neighbors(j), x_prev, weight);
    const double s_out = neighbor_term(out_a, gb.out_neighbors(j), x_prev, weight);
    out(i, j) = (s_in + s_out) / 2.0;
  }
}

}  // namespace

SimilarityMatrix nm_initial(const DirectedGraph& ga, const DirectedGraph& gb) {
  SimilarityMatrix x(ga.node_count(), gb.node_count(), 1.0);
  if (ga.colored() && gb.colored())
    for (NodeId i = 0; i < ga.node_count(); ++i)
      for (NodeId j = 0; j < gb.node_count(); ++j)
        if (colors_differ(ga, gb, i, j)) x(i, j) = 0.0;
  return x;
}

SimilarityMatrix nm_step(const DirectedGraph& ga, const DirectedGraph& gb, const SimilarityMatrix& x_prev) {
  check_step_input(ga, gb, x_prev);
  SimilarityMatrix next(ga.node_count(), gb.node_count());
  const auto rows = static_cast<long>(ga.node_count());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < rows; ++i) update_row(ga, gb, x_prev, static_cast<NodeId>(i), nullptr, next);
  return next;
}

SimilarityMatrix nm_step_serial(const DirectedGraph& ga, const DirectedGraph& gb, const SimilarityMatrix& x_prev) {
  check_step_input(ga, gb, x_prev);
  SimilarityMatrix next(ga.node_count(), gb.node_count());
  for (NodeId i = 0; i < ga.node_count(); ++i) update_row(ga, gb, x_prev, i, nullptr, next);
  return next;
}

SimilarityMatrix nm_step_with(const DirectedGraph& ga, const DirectedGraph& gb, const SimilarityMatrix& x_prev,
                              const MatchingWeightFn& weight) {
  check_step_input(ga, gb, x_prev);
  SimilarityMatrix next(ga.node_count(), gb.node_count());
  for (NodeId i = 0; i < ga.node_count(); ++i) update_row(ga, gb, x_prev, i, &weight, next);
  return next;
}

bool complement_active(const DirectedGraph& ga, const DirectedGraph& gb, const NMConfig& cfg) {
  switch (cfg.complement) {
    case ComplementMode::on:
      return true;
    case ComplementMode::automatic:
      return (ga.density() + gb.density()) / 2.0 > cfg.density_threshold;
    case ComplementMode::off:
      break;
  }
  return false;
}

NMResult nm_similarity(const DirectedGraph& ga, const DirectedGraph& gb, const NMConfig& cfg,
                       const IterateObserver& observe) {
  cfg.validate();
  if (ga.colored() != gb.colored()) throw std::invalid_argument("either both graphs or neither must be colored");

  NMResult result;
  result.complement_applied = complement_active(ga, gb, cfg);
  // Colors survive complementation, so forcing still applies afterwards.
  const DirectedGraph a = result.complement_applied ? complement(ga) : ga;
  const DirectedGraph b = result.complement_applied ? complement(gb) : gb;

  SimilarityMatrix x = nm_initial(a, b);
  if (observe) observe(0, x);
  for (std::size_t k = 1; k <= cfg.max_iterations; ++k) {
    SimilarityMatrix next = nm_step(a, b, x);
    const double change = max_abs_difference(next, x);
    x = std::move(next);
    result.iterations = k;
    if (observe) observe(k, x);
    if (change < cfg.epsilon) {
      result.converged = true;
      break;
    }
  }
  result.matrix = std::move(x);
  return result;
}

}  // namespace nbm
