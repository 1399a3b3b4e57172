#include "nbm/subgraph_experiment.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "nbm/baselines.hpp"
#include "nbm/graph_measures.hpp"
#include "nbm/neighbor_matching.hpp"

namespace nbm {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::nm: return "NM";
    case Method::nm_star: return "NM*";
    case Method::zv: return "ZV";
    case Method::zv_star: return "ZV*";
    case Method::blondel: return "Blondel";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods)
    if (method_name(m) == name) return m;
  return std::nullopt;
}

void SubgraphExperimentConfig::validate() const {
  if (n == 0) throw std::invalid_argument("host size n must be positive");
  if (m_values.empty() || p_values.empty() || methods.empty())
    throw std::invalid_argument("m, p and method lists must be non-empty");
  for (std::size_t m : m_values)
    if (m == 0 || m > n) throw std::invalid_argument("every m must satisfy 1 <= m <= n");
  for (double p : p_values)
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("every p must lie in [0,1]");
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (max_iterations == 0) throw std::invalid_argument("max_iterations must be positive");
  if (n > kDefaultIsomorphismBound) throw std::invalid_argument("n above the isomorphism check bound");
}

TrialInstance make_trial(std::uint64_t seed, std::size_t n, std::size_t m, double p, std::size_t trial) {
  const auto p_bits = std::bit_cast<std::uint64_t>(p);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n),    static_cast<std::uint32_t>(m),
                    static_cast<std::uint32_t>(p_bits), static_cast<std::uint32_t>(p_bits >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  Rng rng(seq);
  TrialInstance t{erdos_renyi(n, p, rng), DirectedGraph{}, {}};
  std::vector<NodeId> nodes(n);
  std::iota(nodes.begin(), nodes.end(), NodeId{0});
  std::shuffle(nodes.begin(), nodes.end(), rng);
  t.chosen.assign(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(m));
  t.pattern = induced_subgraph(t.host, t.chosen);
  return t;
}

SimilarityMatrix method_similarity(Method method, const DirectedGraph& host, const DirectedGraph& pattern, double p,
                                   double epsilon, std::size_t max_iterations) {
  const bool dense = p > 0.5;
  switch (method) {
    case Method::nm:
    case Method::nm_star: {
      NMConfig cfg;
      cfg.epsilon = epsilon;
      cfg.max_iterations = max_iterations;
      cfg.complement = (method == Method::nm_star && dense) ? ComplementMode::on : ComplementMode::off;
      return nm_similarity(host, pattern, cfg).matrix;
    }
    case Method::zv:
      return zager_similarity(host, pattern, epsilon, max_iterations).matrix;
    case Method::zv_star:
      if (dense) return zager_similarity(complement(host), complement(pattern), epsilon, max_iterations).matrix;
      return zager_similarity(host, pattern, epsilon, max_iterations).matrix;
    case Method::blondel:
      return blondel_similarity(host, pattern, epsilon, max_iterations).matrix;
  }
  throw std::logic_error("unknown method");
}

bool matching_recovers_pattern(const DirectedGraph& host, const DirectedGraph& pattern, const SimilarityMatrix& x) {
  const Matching matching = optimal_node_matching(x);
  NodeMapping mapping;
  std::vector<NodeId> image(pattern.node_count());
  for (auto [a, b] : matching.pairs) {
    mapping.pairs.emplace_back(static_cast<NodeId>(b), static_cast<NodeId>(a));
    image[b] = static_cast<NodeId>(a);
  }
  if (is_mapping_isomorphism(pattern, host, mapping)) return true;
  return exists_isomorphism(pattern, induced_subgraph(host, image));
}

ExperimentReport run_subgraph_experiment(const SubgraphExperimentConfig& cfg) {
  cfg.validate();
  ExperimentReport report;
  for (Method method : cfg.methods) {
    MethodSummary summary{method, 0, 0, 0.0};
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t m : cfg.m_values) {
      for (double p : cfg.p_values) {
        std::vector<char> success(cfg.trials, 0);
        const auto trials = static_cast<long>(cfg.trials);
#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
        for (long t = 0; t < trials; ++t) {
          const TrialInstance inst = make_trial(cfg.seed, cfg.n, m, p, static_cast<std::size_t>(t));
          const SimilarityMatrix x =
              method_similarity(method, inst.host, inst.pattern, p, cfg.epsilon, cfg.max_iterations);
          success[t] = matching_recovers_pattern(inst.host, inst.pattern, x) ? 1 : 0;
        }
        CellResult cell{method, m, p, cfg.trials, 0};
        cell.successes = static_cast<std::size_t>(std::count(success.begin(), success.end(), 1));
        summary.trials += cell.trials;
        summary.successes += cell.successes;
        report.cells.push_back(cell);
      }
    }
    summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.summary.push_back(summary);
  }
  return report;
}

}  // namespace nbm
