#pragma once

#include <utility>
#include <vector>

#include "nbm/graph.hpp"

namespace nbm {

/// Injective pairing of nodes of a pattern graph onto nodes of a host graph,
/// stored as (pattern_node, host_node) pairs.
struct NodeMapping {
  std::vector<std::pair<NodeId, NodeId>> pairs;
};

inline constexpr std::size_t kDefaultIsomorphismBound = 20;

/// True iff `m` carries gb isomorphically onto the subgraph of ga induced by
/// the image of m: (u,v) in E_B <=> (m(u),m(v)) in E_A, and colors agree when
/// both graphs are colored. Throws std::invalid_argument when m does not map
/// every node of gb exactly once, or is not injective.
bool is_mapping_isomorphism(const DirectedGraph& gb, const DirectedGraph& ga, const NodeMapping& m);

/// Backtracking search for a color- and edge-preserving bijection. Throws
/// std::invalid_argument when node counts differ or exceed `bound`.
bool exists_isomorphism(const DirectedGraph& g1, const DirectedGraph& g2,
                        std::size_t bound = kDefaultIsomorphismBound);

}  // namespace nbm
