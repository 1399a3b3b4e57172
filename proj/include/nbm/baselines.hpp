#pragma once

#include "nbm/graph.hpp"
#include "nbm/matrix.hpp"
#include "nbm/neighbor_matching.hpp"

namespace nbm {

// Sum-based similarity iterations with matrix normalization, used as
// comparison methods. Both start from all-ones and stop on the same
// max-entry-change rule as nm_similarity. Even/odd oscillation is not
// detected; it runs into the iteration cap and reports converged = false.
//
// If either graph has no edges, every update is identically zero. Both
// methods then return the normalized all-ones matrix after zero steps with
// converged = true.

/// Sum over in-neighbor pairs plus sum over out-neighbor pairs, divided by
/// the Frobenius norm of the result. Throws std::domain_error if the
/// unnormalized matrix is all zero.
SimilarityMatrix blondel_step(const DirectedGraph& ga, const DirectedGraph& gb, const SimilarityMatrix& x);

NMResult blondel_similarity(const DirectedGraph& ga, const DirectedGraph& gb, double epsilon,
                            std::size_t max_iterations, const IterateObserver& observe = {});

/// |E_A| x |E_B| edge scores; row u is ga.edges()[u], column v is gb.edges()[v].
using EdgeSimilarityMatrix = Matrix;

/// y[u][v] = x[s(u)][s(v)] + x[t(u)][t(v)], not normalized.
EdgeSimilarityMatrix zager_edge_update(const DirectedGraph& ga, const DirectedGraph& gb, const SimilarityMatrix& x);

struct ZagerState {
  SimilarityMatrix nodes;
  EdgeSimilarityMatrix edges;
};

/// Edge update from x, normalize, then node update
/// x[i][j] = sum over edges ending at (i, j) + sum over edges starting at
/// (i, j), normalize.
ZagerState zager_step(const DirectedGraph& ga, const DirectedGraph& gb, const SimilarityMatrix& x);

NMResult zager_similarity(const DirectedGraph& ga, const DirectedGraph& gb, double epsilon,
                          std::size_t max_iterations, const IterateObserver& observe = {});

}  // namespace nbm
