#include "nbm/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nbm {

DirectedGraph DirectedGraph::from_edge_list(std::size_t n, std::span<const Edge> edges,
                                            std::optional<std::vector<Color>> colors,
                                            bool allow_self_loops) {
  if (n == 0) throw std::invalid_argument("graph must have at least one node");
  if (colors && colors->size() != n)
    throw std::invalid_argument("color sequence has length " + std::to_string(colors->size()) +
                                ", expected " + std::to_string(n));

  DirectedGraph g;
  g.n_ = n;
  g.edges_.assign(edges.begin(), edges.end());
  for (const Edge& e : g.edges_) {
    if (e.source >= n || e.target >= n)
      throw std::invalid_argument("edge (" + std::to_string(e.source) + "," +
                                  std::to_string(e.target) + ") has an endpoint out of range");
    if (e.source == e.target && !allow_self_loops)
      throw std::invalid_argument("self-loop at node " + std::to_string(e.source));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end())
    throw std::invalid_argument("duplicate edge (" + std::to_string(dup->source) + "," +
                                std::to_string(dup->target) + ")");
  if (colors) g.colors_ = std::move(*colors);

  const std::size_t m = g.edges_.size();
  g.out_offsets_.assign(n + 1, 0);
  g.in_offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.out_offsets_[e.source + 1];
    ++g.in_offsets_[e.target + 1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    g.out_offsets_[i + 1] += g.out_offsets_[i];
    g.in_offsets_[i + 1] += g.in_offsets_[i];
  }
  g.out_adj_.resize(m);
  g.in_adj_.resize(m);
  g.in_edge_ids_.resize(m);
  std::vector<std::uint32_t> fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  // Edges are sorted by source, so out-lists come out sorted and in-lists
  // are filled in increasing source order.
  for (std::uint32_t k = 0; k < m; ++k) {
    const Edge& e = g.edges_[k];
    g.out_adj_[k] = e.target;
    const auto slot = fill[e.target]++;
    g.in_adj_[slot] = e.source;
    g.in_edge_ids_[slot] = k;
  }
  return g;
}

bool DirectedGraph::has_edge(NodeId u, NodeId v) const {
  auto out = out_neighbors(u);
  return std::binary_search(out.begin(), out.end(), v);
}

double DirectedGraph::density() const {
  if (n_ < 2) return 0.0;
  return static_cast<double>(edges_.size()) / (static_cast<double>(n_) * static_cast<double>(n_ - 1));
}

DirectedGraph complement(const DirectedGraph& g) {
  const auto n = static_cast<NodeId>(g.node_count());
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) - g.edge_count());
  for (NodeId u = 0; u < n; ++u) {
    auto out = g.out_neighbors(u);
    auto it = out.begin();
    for (NodeId v = 0; v < n; ++v) {
      while (it != out.end() && *it < v) ++it;
      if (u == v) continue;
      if (it != out.end() && *it == v) continue;
      edges.push_back({u, v});
    }
  }
  std::optional<std::vector<Color>> colors;
  if (g.colored()) colors.emplace(g.colors().begin(), g.colors().end());
  return DirectedGraph::from_edge_list(n, edges, std::move(colors));
}

DirectedGraph induced_subgraph(const DirectedGraph& g, std::span<const NodeId> nodes) {
  if (nodes.empty()) throw std::invalid_argument("induced subgraph needs at least one node");
  constexpr auto kAbsent = static_cast<NodeId>(-1);
  std::vector<NodeId> relabel(g.node_count(), kAbsent);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const NodeId v = nodes[k];
    if (v >= g.node_count()) throw std::invalid_argument("node " + std::to_string(v) + " out of range");
    if (relabel[v] != kAbsent) throw std::invalid_argument("node " + std::to_string(v) + " listed twice");
    relabel[v] = static_cast<NodeId>(k);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (relabel[e.source] != kAbsent && relabel[e.target] != kAbsent)
      edges.push_back({relabel[e.source], relabel[e.target]});
  }
  std::optional<std::vector<Color>> colors;
  if (g.colored()) {
    colors.emplace();
    for (NodeId v : nodes) colors->push_back(g.color(v));
  }
  bool loops = std::any_of(edges.begin(), edges.end(), [](const Edge& e) { return e.source == e.target; });
  return DirectedGraph::from_edge_list(nodes.size(), edges, std::move(colors), loops);
}

DirectedGraph erdos_renyi(std::size_t n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0,1]");
  if (n == 0) throw std::invalid_argument("graph must have at least one node");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = 0; v < n; ++v)
      if (u != v && unit(rng) < p) edges.push_back({u, v});
  return DirectedGraph::from_edge_list(n, edges);
}

DirectedGraph permuted(const DirectedGraph& g, std::span<const NodeId> perm) {
  const std::size_t n = g.node_count();
  if (perm.size() != n) throw std::invalid_argument("permutation length differs from node count");
  std::vector<bool> seen(n, false);
  for (NodeId v : perm) {
    if (v >= n || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  bool loops = false;
  for (const Edge& e : g.edges()) {
    edges.push_back({perm[e.source], perm[e.target]});
    loops |= e.source == e.target;
  }
  std::optional<std::vector<Color>> colors;
  if (g.colored()) {
    colors.emplace(n);
    for (std::size_t i = 0; i < n; ++i) (*colors)[perm[i]] = g.color(static_cast<NodeId>(i));
  }
  return DirectedGraph::from_edge_list(n, edges, std::move(colors), loops);
}

}  // namespace nbm
