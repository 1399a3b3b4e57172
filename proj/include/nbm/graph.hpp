#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace nbm {

using NodeId = std::uint32_t;
using Color = std::uint32_t;

/// Random stream used by every generator in the library. Always passed
/// explicitly; never shared between threads.
using Rng = std::mt19937_64;

struct Edge {
  NodeId source = 0;
  NodeId target = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable directed graph on nodes 0..n-1 with optional node colors.
///
/// Adjacency is stored twice in compressed-row form (by source and by
/// target) so in- and out-neighbor lists are contiguous and sorted.
class DirectedGraph {
 public:
  /// Throws std::invalid_argument on n == 0, out-of-range endpoints,
  /// duplicate edges, self-loops (unless allowed) or a color sequence
  /// whose length differs from n.
  static DirectedGraph from_edge_list(std::size_t n, std::span<const Edge> edges,
                                      std::optional<std::vector<Color>> colors = std::nullopt,
                                      bool allow_self_loops = false);

  std::size_t node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Edges sorted by (source, target). The position of an edge in this
  /// list is its edge index.
  std::span<const Edge> edges() const { return edges_; }

  std::span<const NodeId> out_neighbors(NodeId i) const {
    return {out_adj_.data() + out_offsets_[i], out_adj_.data() + out_offsets_[i + 1]};
  }
  std::span<const NodeId> in_neighbors(NodeId i) const {
    return {in_adj_.data() + in_offsets_[i], in_adj_.data() + in_offsets_[i + 1]};
  }
  /// Indices into edges() of the edges ending at i, ordered by source.
  std::span<const std::uint32_t> in_edge_indices(NodeId i) const {
    return {in_edge_ids_.data() + in_offsets_[i], in_edge_ids_.data() + in_offsets_[i + 1]};
  }
  /// Edges starting at i occupy the contiguous range [out_offsets(i), out_offsets(i+1)).
  std::uint32_t first_out_edge(NodeId i) const { return out_offsets_[i]; }

  std::size_t in_degree(NodeId i) const { return in_offsets_[i + 1] - in_offsets_[i]; }
  std::size_t out_degree(NodeId i) const { return out_offsets_[i + 1] - out_offsets_[i]; }

  bool has_edge(NodeId u, NodeId v) const;

  bool colored() const { return !colors_.empty(); }
  /// Empty when the graph is uncolored.
  std::span<const Color> colors() const { return colors_; }
  Color color(NodeId i) const { return colors_.empty() ? Color{0} : colors_[i]; }

  /// |E| / (n(n-1)); zero for a single node.
  double density() const;

  bool operator==(const DirectedGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_ && colors_ == other.colors_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Color> colors_;
  std::vector<std::uint32_t> out_offsets_, in_offsets_;
  std::vector<NodeId> out_adj_, in_adj_;
  std::vector<std::uint32_t> in_edge_ids_;
};

/// Same nodes and colors; (u,v) with u != v is an edge iff it is not an edge of g.
DirectedGraph complement(const DirectedGraph& g);

/// Subgraph induced by `nodes`, relabelled 0..k-1 in the given order.
DirectedGraph induced_subgraph(const DirectedGraph& g, std::span<const NodeId> nodes);

/// G(n,p) on ordered pairs: every (u,v), u != v, is an edge independently
/// with probability p.
DirectedGraph erdos_renyi(std::size_t n, double p, Rng& rng);

/// Copy of g with node i renamed to perm[i].
DirectedGraph permuted(const DirectedGraph& g, std::span<const NodeId> perm);

}  // namespace nbm
