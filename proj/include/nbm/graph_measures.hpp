#pragma once

#include <optional>
#include <string_view>

#include "nbm/assignment.hpp"
#include "nbm/matrix.hpp"

namespace nbm {

enum class GraphSimilarityVariant {
  /// Optimal node-matching weight / min(|V_A|, |V_B|).
  min_denominator,
  /// Optimal node-matching weight / max(|V_A|, |V_B|); penalizes size gaps.
  max_denominator,
  /// Mean of all matrix entries.
  matrix_average,
};

/// Parses "min", "max" or "avg".
std::optional<GraphSimilarityVariant> parse_variant(std::string_view text);

/// Maximum-weight pairing of rows (nodes of A) with columns (nodes of B).
Matching optimal_node_matching(const SimilarityMatrix& x);

double graph_similarity(const SimilarityMatrix& x,
                        GraphSimilarityVariant variant = GraphSimilarityVariant::min_denominator);

}  // namespace nbm
