#pragma once

#include <span>
#include <string>
#include <vector>

#include "nbm/cnf.hpp"
#include "nbm/graph_measures.hpp"
#include "nbm/neighbor_matching.hpp"

namespace nbm {

struct KnnConfig {
  std::size_t k = 3;
  NMConfig similarity;
  GraphSimilarityVariant variant = GraphSimilarityVariant::min_denominator;
  bool polarity = false;
};

struct KnnResult {
  std::vector<std::string> predicted;
  std::size_t correct = 0;
  double accuracy = 0.0;
  /// Pairwise graph similarity; the diagonal is unused and set to 1.
  Matrix similarity;
};

/// Graph similarity of every unordered pair, each computed once and mirrored.
/// Pairs are evaluated in parallel; the result does not depend on the thread
/// count.
Matrix pairwise_graph_similarity(std::span<const DirectedGraph> graphs, const NMConfig& cfg,
                                 GraphSimilarityVariant variant);

/// Leave-one-out k-nearest-neighbor vote over a precomputed similarity table.
/// Neighbors are ranked by similarity, ties by lower index. The winning class
/// has the most votes, then the larger summed similarity, then the smaller
/// label in lexicographic order.
///
/// Throws std::invalid_argument if the table is not square, has fewer than
/// two rows, k is 0 or k >= corpus size, or a label is empty.
KnnResult knn_from_similarity(const Matrix& similarity, std::span<const std::string> labels, std::size_t k);

/// Builds variable-clause graphs for the corpus and classifies each formula
/// against all the others.
KnnResult knn_classify(std::span<const CnfInstance> corpus, const KnnConfig& cfg);

}  // namespace nbm
