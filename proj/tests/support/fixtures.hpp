#pragma once

#include "nbm/graph.hpp"
#include "nbm/matrix.hpp"

namespace fixture {

// Example pair: a 3-node path and a 6-node graph.
inline nbm::DirectedGraph example_a() {
  const nbm::Edge edges[] = {{0, 1}, {1, 2}};
  return nbm::DirectedGraph::from_edge_list(3, edges);
}

inline nbm::DirectedGraph example_b() {
  const nbm::Edge edges[] = {{0, 1}, {1, 3}, {1, 4}, {2, 3}, {3, 4}, {4, 5}};
  return nbm::DirectedGraph::from_edge_list(6, edges);
}

/// Reference neighbor-matching scores for the pair above (3 decimals).
inline nbm::Matrix reference_scores() {
  const double values[3][6] = {{0.682, 0.100, 0.597, 0.200, 0.000, 0.000},
                               {0.000, 0.364, 0.045, 0.195, 0.400, 0.000},
                               {0.000, 0.000, 0.000, 0.091, 0.091, 0.700}};
  nbm::Matrix m(3, 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = values[i][j];
  return m;
}

}  // namespace fixture
