#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "nbm/graph.hpp"
#include "nbm/isomorphism.hpp"
#include "nbm/matrix.hpp"

namespace nbm {

enum class Method { nm, nm_star, zv, zv_star, blondel };

inline constexpr Method kAllMethods[] = {Method::nm, Method::nm_star, Method::zv, Method::zv_star, Method::blondel};

/// "NM", "NM*", "ZV", "ZV*", "Blondel".
std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

struct SubgraphExperimentConfig {
  std::size_t n = 15;
  std::vector<std::size_t> m_values{8, 9, 10, 11, 12, 13, 14, 15};
  std::vector<double> p_values{0.2, 0.4, 0.6, 0.8};
  std::size_t trials = 50;
  double epsilon = 1e-4;
  std::size_t max_iterations = 1000;
  std::vector<Method> methods{Method::nm, Method::nm_star, Method::zv, Method::zv_star, Method::blondel};
  std::uint64_t seed = 1;
  /// Run the trials of a cell in parallel. Results are identical either way.
  bool parallel = true;

  /// Throws std::invalid_argument on an empty grid, m = 0 or m > n,
  /// p outside [0,1], trials = 0 or epsilon <= 0.
  void validate() const;
};

struct CellResult {
  Method method = Method::nm;
  std::size_t m = 0;
  double p = 0.0;
  std::size_t trials = 0;
  std::size_t successes = 0;

  double accuracy() const { return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials); }
  bool operator==(const CellResult&) const = default;
};

struct MethodSummary {
  Method method = Method::nm;
  std::size_t trials = 0;
  std::size_t successes = 0;
  double wall_seconds = 0.0;

  double accuracy() const { return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials); }
  bool operator==(const MethodSummary&) const = default;
};

struct ExperimentReport {
  /// Ordered by method (config order), then m, then p.
  std::vector<CellResult> cells;
  std::vector<MethodSummary> summary;

  bool operator==(const ExperimentReport&) const = default;
};

/// One generated instance: host graph A ~ G(n,p), the chosen nodes in random
/// order, and the pattern B they induce.
struct TrialInstance {
  DirectedGraph host;
  DirectedGraph pattern;
  std::vector<NodeId> chosen;
};

/// Deterministic in (seed, n, m, p, trial); every method sees the same
/// instance for the same cell and trial.
TrialInstance make_trial(std::uint64_t seed, std::size_t n, std::size_t m, double p, std::size_t trial);

/// Similarity of host nodes (rows) to pattern nodes (columns). Starred
/// methods work on complements when p > 0.5.
SimilarityMatrix method_similarity(Method method, const DirectedGraph& host, const DirectedGraph& pattern, double p,
                                   double epsilon, std::size_t max_iterations);

/// True iff the pattern is isomorphic to the host subgraph induced by the
/// optimal node matching of `x`.
bool matching_recovers_pattern(const DirectedGraph& host, const DirectedGraph& pattern, const SimilarityMatrix& x);

ExperimentReport run_subgraph_experiment(const SubgraphExperimentConfig& cfg);

}  // namespace nbm
