#include "nbm/knn.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace nbm {

Matrix pairwise_graph_similarity(std::span<const DirectedGraph> graphs, const NMConfig& cfg,
                                 GraphSimilarityVariant variant) {
  const std::size_t n = graphs.size();
  Matrix sim(n, n, 1.0);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  const auto count = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    auto [i, j] = pairs[k];
    const NMResult r = nm_similarity(graphs[i], graphs[j], cfg);
    const double s = graph_similarity(r.matrix, variant);
    sim(i, j) = s;
    sim(j, i) = s;
  }
  return sim;
}

KnnResult knn_from_similarity(const Matrix& similarity, std::span<const std::string> labels, std::size_t k) {
  const std::size_t n = labels.size();
  if (similarity.rows() != n || similarity.cols() != n)
    throw std::invalid_argument("similarity table must be square with one row per instance");
  if (n < 2) throw std::invalid_argument("corpus needs at least two instances");
  if (k == 0 || k >= n) throw std::invalid_argument("k must satisfy 1 <= k < corpus size");
  for (const auto& label : labels)
    if (label.empty()) throw std::invalid_argument("every instance needs a class label");

  KnnResult result;
  result.similarity = similarity;
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < n; ++i) {
    others.clear();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) others.push_back(j);
    std::stable_sort(others.begin(), others.end(),
                     [&](std::size_t a, std::size_t b) { return similarity(i, a) > similarity(i, b); });

    std::map<std::string, std::pair<std::size_t, std::vector<double>>> votes;
    for (std::size_t r = 0; r < k; ++r) {
      auto& [count, weights] = votes[labels[others[r]]];
      ++count;
      weights.push_back(similarity(i, others[r]));
    }
    // std::map iterates labels in lexicographic order, so strict comparisons
    // keep the smaller label on a full tie.
    const std::string* best = nullptr;
    std::size_t best_count = 0;
    double best_weight = 0.0;
    for (const auto& [label, vote] : votes) {
      const double weight = exact_sum(vote.second);
      if (best == nullptr || vote.first > best_count || (vote.first == best_count && weight > best_weight)) {
        best = &label;
        best_count = vote.first;
        best_weight = weight;
      }
    }
    result.predicted.push_back(*best);
    if (*best == labels[i]) ++result.correct;
  }
  result.accuracy = static_cast<double>(result.correct) / static_cast<double>(n);
  return result;
}

KnnResult knn_classify(std::span<const CnfInstance> corpus, const KnnConfig& cfg) {
  cfg.similarity.validate();
  if (corpus.size() < 2) throw std::invalid_argument("corpus needs at least two instances");
  if (cfg.k == 0 || cfg.k >= corpus.size()) throw std::invalid_argument("k must satisfy 1 <= k < corpus size");
  std::vector<DirectedGraph> graphs;
  std::vector<std::string> labels;
  for (const auto& f : corpus) {
    if (f.label.empty()) throw std::invalid_argument("every instance needs a class label");
    graphs.push_back(variable_clause_graph(f, cfg.polarity));
    labels.push_back(f.label);
  }
  const Matrix sim = pairwise_graph_similarity(graphs, cfg.similarity, cfg.variant);
  return knn_from_similarity(sim, labels, cfg.k);
}

}  // namespace nbm
