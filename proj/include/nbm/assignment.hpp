#pragma once

#include <span>
#include <utility>
#include <vector>

#include "nbm/matrix.hpp"

namespace nbm {

/// rows x cols table of finite, non-negative pair weights.
using WeightTable = Matrix;

struct Matching {
  /// (row, col) pairs in increasing row order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  double total_weight = 0.0;
};

/// Maximum-weight matching of size min(rows, cols).
///
/// Hungarian method with row-by-row augmentation; columns are scanned in
/// increasing index order and the first minimal slack wins, so ties resolve
/// the same way on every run. Tables with more rows than columns are solved
/// transposed. Throws std::invalid_argument on an empty table or on a
/// negative or non-finite weight.
Matching solve_max_assignment(const WeightTable& t);

/// Weight of the optimal matching without input validation or pair output.
/// Reuses per-thread scratch space, so it is safe to call from parallel loops.
double max_assignment_weight(const WeightTable& t);

/// Correctly rounded sum. Matchings of equal real weight therefore report
/// bit-identical totals regardless of term order.
double exact_sum(std::span<const double> values);

}  // namespace nbm
