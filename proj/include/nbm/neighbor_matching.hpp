#pragma once

#include <functional>

#include "nbm/assignment.hpp"
#include "nbm/graph.hpp"
#include "nbm/matrix.hpp"

namespace nbm {

enum class ComplementMode { off, on, automatic };

struct NMConfig {
  double epsilon = 1e-4;
  std::size_t max_iterations = 1000;
  ComplementMode complement = ComplementMode::off;
  /// Mean edge density above which ComplementMode::automatic switches to
  /// the complement graphs.
  double density_threshold = 0.5;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

struct NMResult {
  SimilarityMatrix matrix;
  std::size_t iterations = 0;
  bool converged = false;
  bool complement_applied = false;
};

/// Called with the iteration index k and x^k, starting with k = 0.
using IterateObserver = std::function<void(std::size_t, const SimilarityMatrix&)>;

/// Weight of a maximum-weight matching for a neighbor table. Used to swap
/// the assignment solver, e.g. for brute-force cross-checks.
using MatchingWeightFn = std::function<double(const WeightTable&)>;

/// x^0: ones everywhere except color-mismatched pairs, which are 0.
SimilarityMatrix nm_initial(const DirectedGraph& ga, const DirectedGraph& gb);

/// One synchronous neighbor-matching update, rows of the result computed in
/// parallel. Every entry reads only x_prev, so the result is bit-identical
/// to nm_step_serial.
///
/// For each pair (i, j) the in-term is the optimal matching weight between
/// the in-neighbors of i and of j under weights x_prev, divided by the larger
/// in-degree; 0/0 counts as 1 and an empty smaller side as 0. The out-term
/// is analogous and the new entry is their mean. Pairs whose colors differ
/// are set to 0.
///
/// Throws std::invalid_argument if x_prev is not |V_A| x |V_B| or holds a
/// value outside [0,1].
SimilarityMatrix nm_step(const DirectedGraph& ga, const DirectedGraph& gb, const SimilarityMatrix& x_prev);

/// Single-threaded reference for nm_step.
SimilarityMatrix nm_step_serial(const DirectedGraph& ga, const DirectedGraph& gb, const SimilarityMatrix& x_prev);

/// nm_step_serial with the assignment solver replaced by `weight`. The
/// singleton shortcut is bypassed, so every non-empty neighbor table reaches
/// `weight`.
SimilarityMatrix nm_step_with(const DirectedGraph& ga, const DirectedGraph& gb, const SimilarityMatrix& x_prev,
                              const MatchingWeightFn& weight);

/// Iterates nm_step from nm_initial until max |x^k - x^{k-1}| < epsilon or the
/// iteration cap is hit (converged = false). With the complement trick active
/// both graphs are replaced by their complements first.
///
/// Throws std::invalid_argument on an invalid config or when exactly one of
/// the graphs is colored.
NMResult nm_similarity(const DirectedGraph& ga, const DirectedGraph& gb, const NMConfig& cfg = {},
                       const IterateObserver& observe = {});

/// Whether `cfg` asks for the complement trick on this pair of graphs.
bool complement_active(const DirectedGraph& ga, const DirectedGraph& gb, const NMConfig& cfg);

}  // namespace nbm
