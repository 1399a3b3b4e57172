#include "nbm/baselines.hpp"

#include <cmath>
#include <stdexcept>

namespace nbm {

namespace {

void check_inputs(const DirectedGraph& ga, const DirectedGraph& gb, const SimilarityMatrix& x) {
  if (x.rows() != ga.node_count() || x.cols() != gb.node_count())
    throw std::invalid_argument("similarity matrix shape does not match the graphs");
}

void normalize(Matrix& m) {
  const double norm = frobenius_norm(m);
  if (!(norm > 0.0)) throw std::domain_error("similarity update produced an all-zero matrix");
  for (double& v : m.values()) v /= norm;
}

bool degenerate(const DirectedGraph& ga, const DirectedGraph& gb) {
  return ga.edge_count() == 0 || gb.edge_count() == 0;
}

template <typename Step>
NMResult iterate(const DirectedGraph& ga, const DirectedGraph& gb, double epsilon, std::size_t max_iterations,
                 const IterateObserver& observe, Step step) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (max_iterations == 0) throw std::invalid_argument("max_iterations must be positive");
  NMResult result;
  SimilarityMatrix x(ga.node_count(), gb.node_count(), 1.0);
  if (degenerate(ga, gb)) {
    normalize(x);
    if (observe) observe(0, x);
    result.matrix = std::move(x);
    result.converged = true;
    return result;
  }
  if (observe) observe(0, x);
  for (std::size_t k = 1; k <= max_iterations; ++k) {
    SimilarityMatrix next = step(x);
    const double change = max_abs_difference(next, x);
    x = std::move(next);
    result.iterations = k;
    if (observe) observe(k, x);
    if (change < epsilon) {
      result.converged = true;
      break;
    }
  }
  result.matrix = std::move(x);
  return result;
}

}  // namespace

SimilarityMatrix blondel_step(const DirectedGraph& ga, const DirectedGraph& gb, const SimilarityMatrix& x) {
  check_inputs(ga, gb, x);
  SimilarityMatrix next(ga.node_count(), gb.node_count());
  const auto rows = static_cast<long>(ga.node_count());
#pragma omp parallel for schedule(static)
  for (long li = 0; li < rows; ++li) {
    const auto i = static_cast<NodeId>(li);
    for (NodeId j = 0; j < gb.node_count(); ++j) {
      double sum = 0.0;
      for (NodeId p : ga.in_neighbors(i))
        for (NodeId q : gb.in_neighbors(j)) sum += x(p, q);
      for (NodeId p : ga.out_neighbors(i))
        for (NodeId q : gb.out_neighbors(j)) sum += x(p, q);
      next(i, j) = sum;
    }
  }
  normalize(next);
  return next;
}

NMResult blondel_similarity(const DirectedGraph& ga, const DirectedGraph& gb, double epsilon,
                            std::size_t max_iterations, const IterateObserver& observe) {
  return iterate(ga, gb, epsilon, max_iterations, observe,
                 [&](const SimilarityMatrix& x) { return blondel_step(ga, gb, x); });
}

EdgeSimilarityMatrix zager_edge_update(const DirectedGraph& ga, const DirectedGraph& gb, const SimilarityMatrix& x) {
  check_inputs(ga, gb, x);
  const auto ea = ga.edges();
  const auto eb = gb.edges();
  EdgeSimilarityMatrix y(ea.size(), eb.size());
  const auto rows = static_cast<long>(ea.size());
#pragma omp parallel for schedule(static)
  for (long u = 0; u < rows; ++u)
    for (std::size_t v = 0; v < eb.size(); ++v)
      y(u, v) = x(ea[u].source, eb[v].source) + x(ea[u].target, eb[v].target);
  return y;
}

ZagerState zager_step(const DirectedGraph& ga, const DirectedGraph& gb, const SimilarityMatrix& x) {
  ZagerState state;
  state.edges = zager_edge_update(ga, gb, x);
  normalize(state.edges);

  const EdgeSimilarityMatrix& y = state.edges;
  SimilarityMatrix next(ga.node_count(), gb.node_count());
  const auto rows = static_cast<long>(ga.node_count());
#pragma omp parallel for schedule(static)
  for (long li = 0; li < rows; ++li) {
    const auto i = static_cast<NodeId>(li);
    for (NodeId j = 0; j < gb.node_count(); ++j) {
      double sum = 0.0;
      for (std::uint32_t u : ga.in_edge_indices(i))
        for (std::uint32_t v : gb.in_edge_indices(j)) sum += y(u, v);
      const std::uint32_t ua = ga.first_out_edge(i), va = gb.first_out_edge(j);
      for (std::uint32_t u = ua; u < ua + ga.out_degree(i); ++u)
        for (std::uint32_t v = va; v < va + gb.out_degree(j); ++v) sum += y(u, v);
      next(i, j) = sum;
    }
  }
  normalize(next);
  state.nodes = std::move(next);
  return state;
}

NMResult zager_similarity(const DirectedGraph& ga, const DirectedGraph& gb, double epsilon,
                          std::size_t max_iterations, const IterateObserver& observe) {
  return iterate(ga, gb, epsilon, max_iterations, observe,
                 [&](const SimilarityMatrix& x) { return zager_step(ga, gb, x).nodes; });
}

}  // namespace nbm
