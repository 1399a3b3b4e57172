#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "nbm/graph.hpp"
#include "nbm/graph_io.hpp"
#include "nbm/isomorphism.hpp"
#include "oracles.hpp"

using namespace nbm;

namespace {

std::vector<Edge> edge_vector(const DirectedGraph& g) { return {g.edges().begin(), g.edges().end()}; }

}  // namespace

TEST_CASE("from_edge_list builds adjacency") {
  const auto a = fixture::example_a();
  CHECK(a.node_count() == 3);
  CHECK(a.edge_count() == 2);
  CHECK(a.out_degree(0) == 1);
  CHECK(a.in_degree(0) == 0);
  CHECK(a.in_degree(2) == 1);
  CHECK(a.out_degree(2) == 0);
  CHECK_FALSE(a.colored());

  const auto b = fixture::example_b();
  CHECK(b.node_count() == 6);
  CHECK(b.edge_count() == 6);
  // Drawing node 2 has out-neighbors 4 and 5, node 5 has in-neighbors 2 and 4.
  CHECK(std::vector<NodeId>(b.out_neighbors(1).begin(), b.out_neighbors(1).end()) == std::vector<NodeId>{3, 4});
  CHECK(std::vector<NodeId>(b.in_neighbors(4).begin(), b.in_neighbors(4).end()) == std::vector<NodeId>{1, 3});
  CHECK(b.has_edge(4, 5));
  CHECK_FALSE(b.has_edge(5, 4));

  const auto single = DirectedGraph::from_edge_list(1, {});
  CHECK(single.node_count() == 1);
  CHECK(single.edge_count() == 0);
  CHECK(single.density() == 0.0);
}

TEST_CASE("from_edge_list rejects invalid input") {
  const Edge out_of_range[] = {{0, 3}};
  CHECK_THROWS_AS(DirectedGraph::from_edge_list(3, out_of_range), std::invalid_argument);
  const Edge duplicate[] = {{0, 1}, {0, 1}};
  CHECK_THROWS_AS(DirectedGraph::from_edge_list(3, duplicate), std::invalid_argument);
  CHECK_THROWS_AS(DirectedGraph::from_edge_list(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(DirectedGraph::from_edge_list(3, {}, std::vector<Color>{0, 1}), std::invalid_argument);
  const Edge loop[] = {{1, 1}};
  CHECK_THROWS_AS(DirectedGraph::from_edge_list(3, loop), std::invalid_argument);
  CHECK(DirectedGraph::from_edge_list(3, loop, std::nullopt, true).has_edge(1, 1));
}

TEST_CASE("in-edge indices follow the edge list") {
  const auto b = fixture::example_b();
  for (NodeId v = 0; v < b.node_count(); ++v) {
    auto ids = b.in_edge_indices(v);
    REQUIRE(ids.size() == b.in_degree(v));
    for (std::size_t k = 0; k < ids.size(); ++k) {
      CHECK(b.edges()[ids[k]].target == v);
      CHECK(b.edges()[ids[k]].source == b.in_neighbors(v)[k]);
    }
    for (std::uint32_t e = b.first_out_edge(v); e < b.first_out_edge(v) + b.out_degree(v); ++e)
      CHECK(b.edges()[e].source == v);
  }
}

TEST_CASE("complement") {
  const Edge one[] = {{0, 1}};
  const auto g = DirectedGraph::from_edge_list(2, one);
  CHECK(edge_vector(complement(g)) == std::vector<Edge>{{1, 0}});

  const auto empty = DirectedGraph::from_edge_list(3, {});
  CHECK(complement(empty).edge_count() == 6);

  const auto colored = DirectedGraph::from_edge_list(2, one, std::vector<Color>{4, 7});
  CHECK(complement(colored).color(1) == 7);

  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const double p = 0.1 * (trial % 10);
    const auto r = erdos_renyi(1 + trial % 12, p, rng);
    CHECK(complement(complement(r)) == r);
    CHECK(complement(r).edge_count() + r.edge_count() == r.node_count() * (r.node_count() - 1));
  }
}

TEST_CASE("induced_subgraph") {
  const auto b = fixture::example_b();
  const NodeId nodes[] = {1, 3, 4};
  const auto sub = induced_subgraph(b, nodes);
  CHECK(edge_vector(sub) == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});

  const NodeId all[] = {0, 1, 2, 3, 4, 5};
  CHECK(induced_subgraph(b, all) == b);

  const NodeId first[] = {0};
  const auto lone = induced_subgraph(fixture::example_a(), first);
  CHECK(lone.node_count() == 1);
  CHECK(lone.edge_count() == 0);

  const NodeId dup[] = {1, 1};
  CHECK_THROWS_AS(induced_subgraph(b, dup), std::invalid_argument);
  const NodeId far[] = {9};
  CHECK_THROWS_AS(induced_subgraph(b, far), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(b, std::span<const NodeId>{}), std::invalid_argument);

  const auto colored = DirectedGraph::from_edge_list(3, {}, std::vector<Color>{5, 6, 7});
  const NodeId pick[] = {2, 0};
  CHECK(induced_subgraph(colored, pick).colors()[0] == 7);
}

TEST_CASE("erdos_renyi") {
  Rng rng(3);
  CHECK(erdos_renyi(10, 0.0, rng).edge_count() == 0);
  CHECK(erdos_renyi(10, 1.0, rng).edge_count() == 90);
  CHECK_THROWS_AS(erdos_renyi(10, 1.5, rng), std::invalid_argument);
  CHECK_THROWS_AS(erdos_renyi(10, -0.1, rng), std::invalid_argument);

  Rng big(2024);
  const auto g = erdos_renyi(1000, 0.3, big);
  CHECK(std::abs(g.density() - 0.3) < 0.01);

  Rng s1(77), s2(77);
  CHECK(erdos_renyi(40, 0.4, s1) == erdos_renyi(40, 0.4, s2));
}

TEST_CASE("is_mapping_isomorphism on the example graphs") {
  const auto a = fixture::example_a();
  const auto b = fixture::example_b();
  CHECK(is_mapping_isomorphism(a, a, {{{0, 0}, {1, 1}, {2, 2}}}));
  CHECK(is_mapping_isomorphism(a, b, {{{0, 0}, {1, 1}, {2, 3}}}));

  // Enumerate the six ordered pairs of {0,1,4} in B against the path.
  const NodeId image[] = {0, 1, 4};
  bool expected = true;
  for (NodeId u = 0; u < 3; ++u)
    for (NodeId v = 0; v < 3; ++v)
      if (u != v) expected &= a.has_edge(u, v) == b.has_edge(image[u], image[v]);
  CHECK(is_mapping_isomorphism(a, b, {{{0, 0}, {1, 1}, {2, 4}}}) == expected);

  // Extra edge 3->4 among the image {1,3,4}.
  CHECK_FALSE(is_mapping_isomorphism(a, b, {{{0, 1}, {1, 3}, {2, 4}}}));

  CHECK_THROWS_AS(is_mapping_isomorphism(a, b, {{{0, 0}, {1, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(is_mapping_isomorphism(a, b, {{{0, 0}, {1, 0}, {2, 3}}}), std::invalid_argument);
  CHECK_THROWS_AS(is_mapping_isomorphism(a, b, {{{0, 0}, {0, 1}, {2, 3}}}), std::invalid_argument);
}

TEST_CASE("is_mapping_isomorphism respects colors") {
  const Edge one[] = {{0, 1}};
  const auto g = DirectedGraph::from_edge_list(2, one, std::vector<Color>{0, 1});
  const auto h = DirectedGraph::from_edge_list(2, one, std::vector<Color>{1, 1});
  CHECK(is_mapping_isomorphism(g, g, {{{0, 0}, {1, 1}}}));
  CHECK_FALSE(is_mapping_isomorphism(g, h, {{{0, 0}, {1, 1}}}));
}

TEST_CASE("exists_isomorphism examples") {
  const auto a = fixture::example_a();
  const NodeId perm[] = {2, 0, 1};
  CHECK(exists_isomorphism(a, permuted(a, perm)));

  const Edge cycle[] = {{0, 1}, {1, 2}, {2, 0}};
  CHECK_FALSE(exists_isomorphism(a, DirectedGraph::from_edge_list(3, cycle)));

  CHECK_THROWS_AS(exists_isomorphism(a, fixture::example_b()), std::invalid_argument);
  Rng rng(1);
  const auto big = erdos_renyi(21, 0.3, rng);
  CHECK_THROWS_AS(exists_isomorphism(big, big), std::invalid_argument);
  CHECK(exists_isomorphism(big, big, 30));
}

TEST_CASE("exists_isomorphism finds permuted copies") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const double p = 0.1 + 0.8 * ((trial * 7) % 10) / 9.0;
    const auto g = erdos_renyi(n, p, rng);
    const auto perm = oracle::random_permutation(n, rng);
    CHECK(exists_isomorphism(g, permuted(g, perm)));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = erdos_renyi(20, 0.5, rng);
    CHECK(exists_isomorphism(g, permuted(g, oracle::random_permutation(20, rng))));
  }
}

TEST_CASE("exists_isomorphism agrees with brute force on small graphs") {
  Rng rng(8);
  int isomorphic = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto g = erdos_renyi(n, 0.4, rng);
    // Same edge count makes the question non-trivial most of the time.
    auto h = erdos_renyi(n, 0.4, rng);
    if (trial % 3 == 0) h = permuted(g, oracle::random_permutation(n, rng));
    const bool expected = oracle::brute_force_isomorphic(g, h);
    isomorphic += expected;
    CHECK(exists_isomorphism(g, h) == expected);
  }
  CHECK(isomorphic > 100);
}

TEST_CASE("colored isomorphism") {
  const Edge one[] = {{0, 1}};
  const auto g = DirectedGraph::from_edge_list(3, one, std::vector<Color>{0, 0, 1});
  const auto h = DirectedGraph::from_edge_list(3, one, std::vector<Color>{0, 1, 0});
  const auto k = DirectedGraph::from_edge_list(3, one, std::vector<Color>{1, 0, 0});
  CHECK(oracle::brute_force_isomorphic(g, h) == false);
  CHECK_FALSE(exists_isomorphism(g, h));
  const NodeId perm[] = {1, 2, 0};
  CHECK(exists_isomorphism(g, permuted(g, perm)));
  CHECK_FALSE(exists_isomorphism(g, k));
}

TEST_CASE("mapping isomorphism implies existence on the induced subgraph") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto host = erdos_renyi(9, 0.3, rng);
    auto chosen = oracle::random_permutation(9, rng);
    chosen.resize(4);
    const auto pattern = induced_subgraph(host, chosen);
    // Random mapping onto a random 4-set.
    auto image = oracle::random_permutation(9, rng);
    image.resize(4);
    NodeMapping m;
    for (NodeId b = 0; b < 4; ++b) m.pairs.emplace_back(b, image[b]);
    if (is_mapping_isomorphism(pattern, host, m)) CHECK(exists_isomorphism(pattern, induced_subgraph(host, image)));
    NodeMapping truth;
    for (NodeId b = 0; b < 4; ++b) truth.pairs.emplace_back(b, chosen[b]);
    CHECK(is_mapping_isomorphism(pattern, host, truth));
  }
}

TEST_CASE("graph text format") {
  std::istringstream in(
      "# example graph A\n"
      "graph 3\n"
      "\n"
      "edge 0 1   # first\n"
      "edge 1 2\n");
  CHECK(read_graph(in) == fixture::example_a());

  std::istringstream colored("graph 3\ncolor 2 5\nedge 2 0\n");
  const auto g = read_graph(colored);
  CHECK(g.colored());
  CHECK(g.color(0) == 0);
  CHECK(g.color(2) == 5);

  std::ostringstream out;
  write_graph(out, g);
  std::istringstream back(out.str());
  CHECK(read_graph(back) == g);
}

TEST_CASE("graph text format errors carry line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_graph(in, "test.graph");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).rfind("test.graph:", 0) == 0);
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("graph 3\nedge 0 1\nedge 0 x\n") == 3);
  CHECK(line_of("# c\nedge 0 1\n") == 2);
  CHECK(line_of("graph 3\nedge 0 5\n") == 2);
  CHECK(line_of("graph 3\nedge 0 1\nedge 1 2\nedge 0 1\n") == 4);
  CHECK(line_of("graph 3\nnode 1\n") == 2);
  CHECK(line_of("graph 3\nedge 0 1 2\n") == 2);
  CHECK(line_of("graph 0\n") == 1);
  CHECK(line_of("graph 2\ncolor 3 1\n") == 2);
  CHECK(line_of("# only comments\n") == 1);
  CHECK(line_of("graph 2\nedge 1 1\n") == 2);
}
