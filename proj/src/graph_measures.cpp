#include "nbm/graph_measures.hpp"

#include <algorithm>
#include <stdexcept>

namespace nbm {

std::optional<GraphSimilarityVariant> parse_variant(std::string_view text) {
  if (text == "min") return GraphSimilarityVariant::min_denominator;
  if (text == "max") return GraphSimilarityVariant::max_denominator;
  if (text == "avg") return GraphSimilarityVariant::matrix_average;
  return std::nullopt;
}

Matching optimal_node_matching(const SimilarityMatrix& x) {
  if (x.empty()) throw std::invalid_argument("similarity matrix is empty");
  return solve_max_assignment(x);
}

double graph_similarity(const SimilarityMatrix& x, GraphSimilarityVariant variant) {
  if (x.empty()) throw std::invalid_argument("similarity matrix is empty");
  switch (variant) {
    case GraphSimilarityVariant::matrix_average:
      return exact_sum(x.values()) / static_cast<double>(x.values().size());
    case GraphSimilarityVariant::max_denominator:
      return optimal_node_matching(x).total_weight / static_cast<double>(std::max(x.rows(), x.cols()));
    case GraphSimilarityVariant::min_denominator:
      break;
  }
  return optimal_node_matching(x).total_weight / static_cast<double>(std::min(x.rows(), x.cols()));
}

}  // namespace nbm
