#include "nbm/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace nbm {

bool is_mapping_isomorphism(const DirectedGraph& gb, const DirectedGraph& ga, const NodeMapping& m) {
  const std::size_t nb = gb.node_count();
  constexpr auto kUnmapped = static_cast<NodeId>(-1);
  std::vector<NodeId> image(nb, kUnmapped);
  std::vector<bool> used(ga.node_count(), false);
  for (auto [b, a] : m.pairs) {
    if (b >= nb || a >= ga.node_count()) throw std::invalid_argument("mapping refers to a node out of range");
    if (image[b] != kUnmapped) throw std::invalid_argument("node " + std::to_string(b) + " mapped twice");
    if (used[a]) throw std::invalid_argument("host node " + std::to_string(a) + " used twice");
    image[b] = a;
    used[a] = true;
  }
  if (m.pairs.size() != nb) throw std::invalid_argument("mapping does not cover every node");

  if (gb.colored() && ga.colored())
    for (NodeId u = 0; u < nb; ++u)
      if (gb.color(u) != ga.color(image[u])) return false;

  // Every edge of gb must be present in ga, and the induced edge count must
  // match, which rules out extra edges among the image.
  for (const Edge& e : gb.edges())
    if (!ga.has_edge(image[e.source], image[e.target])) return false;
  std::size_t induced = 0;
  for (NodeId u = 0; u < nb; ++u)
    for (NodeId v : ga.out_neighbors(image[u]))
      if (used[v]) ++induced;
  return induced == gb.edge_count();
}

namespace {

using Labels = std::vector<std::uint32_t>;

// Joint color refinement over both graphs so labels are comparable.
void refine(const DirectedGraph& g1, const DirectedGraph& g2, Labels& l1, Labels& l2) {
  const bool use_colors = g1.colored() && g2.colored();
  l1.assign(g1.node_count(), 0);
  l2.assign(g2.node_count(), 0);
  std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
  auto signature = [use_colors](const DirectedGraph& g, const Labels& prev, NodeId v) {
    std::vector<std::uint32_t> sig{prev[v], use_colors ? g.color(v) : 0u, static_cast<std::uint32_t>(g.in_degree(v)),
                                   static_cast<std::uint32_t>(g.out_degree(v))};
    std::vector<std::uint32_t> in, out;
    for (NodeId w : g.in_neighbors(v)) in.push_back(prev[w]);
    for (NodeId w : g.out_neighbors(v)) out.push_back(prev[w]);
    std::sort(in.begin(), in.end());
    std::sort(out.begin(), out.end());
    sig.insert(sig.end(), in.begin(), in.end());
    sig.push_back(static_cast<std::uint32_t>(-1));
    sig.insert(sig.end(), out.begin(), out.end());
    return sig;
  };
  for (int round = 0; round < 3; ++round) {
    ids.clear();
    Labels n1(l1.size()), n2(l2.size());
    for (NodeId v = 0; v < g1.node_count(); ++v)
      n1[v] = ids.try_emplace(signature(g1, l1, v), static_cast<std::uint32_t>(ids.size())).first->second;
    for (NodeId v = 0; v < g2.node_count(); ++v)
      n2[v] = ids.try_emplace(signature(g2, l2, v), static_cast<std::uint32_t>(ids.size())).first->second;
    l1 = std::move(n1);
    l2 = std::move(n2);
  }
}

class IsoSearch {
 public:
  IsoSearch(const DirectedGraph& g1, const DirectedGraph& g2) : n_(g1.node_count()), adj1_(n_ * n_), adj2_(n_ * n_) {
    for (const Edge& e : g1.edges()) adj1_[e.source * n_ + e.target] = 1;
    for (const Edge& e : g2.edges()) adj2_[e.source * n_ + e.target] = 1;
    refine(g1, g2, label1_, label2_);
    order_ = search_order(g1);
  }

  bool run() {
    auto a = label1_, b = label2_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
    map_.assign(n_, kNone);
    used_.assign(n_, false);
    return extend(0);
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // Most-constrained-first: each next node has the most neighbors among
  // nodes already placed.
  std::vector<std::size_t> search_order(const DirectedGraph& g) const {
    std::vector<std::size_t> order;
    std::vector<bool> placed(n_, false);
    std::vector<std::size_t> links(n_, 0);
    for (std::size_t step = 0; step < n_; ++step) {
      std::size_t best = kNone;
      for (std::size_t v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        auto degree = [&](std::size_t x) { return g.in_degree(static_cast<NodeId>(x)) + g.out_degree(static_cast<NodeId>(x)); };
        if (best == kNone || links[v] > links[best] || (links[v] == links[best] && degree(v) > degree(best))) best = v;
      }
      placed[best] = true;
      order.push_back(best);
      for (std::size_t w = 0; w < n_; ++w)
        if (adj1_[best * n_ + w] || adj1_[w * n_ + best]) ++links[w];
    }
    return order;
  }

  bool consistent(std::size_t u, std::size_t v) const {
    if (label1_[u] != label2_[v]) return false;
    if (adj1_[u * n_ + u] != adj2_[v * n_ + v]) return false;
    for (std::size_t k = 0; k < n_; ++k) {
      const std::size_t w = map_[k];
      if (w == kNone) continue;
      if (adj1_[u * n_ + k] != adj2_[v * n_ + w]) return false;
      if (adj1_[k * n_ + u] != adj2_[w * n_ + v]) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const std::size_t u = order_[depth];
    for (std::size_t v = 0; v < n_; ++v) {
      if (used_[v] || !consistent(u, v)) continue;
      map_[u] = v;
      used_[v] = true;
      if (extend(depth + 1)) return true;
      map_[u] = kNone;
      used_[v] = false;
    }
    return false;
  }

  std::size_t n_;
  std::vector<char> adj1_, adj2_;
  Labels label1_, label2_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
};

}  // namespace

bool exists_isomorphism(const DirectedGraph& g1, const DirectedGraph& g2, std::size_t bound) {
  if (g1.node_count() != g2.node_count()) throw std::invalid_argument("isomorphism check needs equal node counts");
  if (g1.node_count() > bound)
    throw std::invalid_argument("isomorphism check limited to " + std::to_string(bound) + " nodes");
  if (g1.edge_count() != g2.edge_count()) return false;
  return IsoSearch(g1, g2).run();
}

}  // namespace nbm
