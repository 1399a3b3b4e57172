#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "nbm/graph_io.hpp"
#include "nbm/report.hpp"
#include "nbm/subgraph_experiment.hpp"

using namespace nbm;

namespace {

ExperimentReport without_timing(ExperimentReport r) {
  for (auto& s : r.summary) s.wall_seconds = 0.0;
  return r;
}

SubgraphExperimentConfig small_config() {
  SubgraphExperimentConfig cfg;
  cfg.n = 8;
  cfg.m_values = {5, 8};
  cfg.p_values = {0.3, 0.7};
  cfg.trials = 4;
  cfg.seed = 11;
  return cfg;
}

}  // namespace

TEST_CASE("trial instances") {
  for (std::size_t trial = 0; trial < 10; ++trial) {
    const auto t = make_trial(3, 12, 7, 0.4, trial);
    CHECK(t.host.node_count() == 12);
    CHECK(t.pattern.node_count() == 7);
    CHECK(std::set<NodeId>(t.chosen.begin(), t.chosen.end()).size() == 7);
    CHECK(t.pattern == induced_subgraph(t.host, t.chosen));

    const auto again = make_trial(3, 12, 7, 0.4, trial);
    CHECK(again.host == t.host);
    CHECK(again.chosen == t.chosen);
  }
  CHECK_FALSE(make_trial(3, 12, 7, 0.4, 0).host == make_trial(4, 12, 7, 0.4, 0).host);
  CHECK_FALSE(make_trial(3, 12, 7, 0.4, 0).host == make_trial(3, 12, 7, 0.4, 1).host);
}

TEST_CASE("pattern recovery check") {
  const std::vector<Edge> e{{0, 1}};
  const auto host = DirectedGraph::from_edge_list(3, e);
  const auto pattern = DirectedGraph::from_edge_list(2, e);

  Matrix good(3, 2, 0.0);
  good(0, 0) = good(1, 1) = 1.0;
  CHECK(matching_recovers_pattern(host, pattern, good));

  // Host nodes 1,0 for pattern nodes 0,1: the edge is reversed but the
  // induced subgraph is still isomorphic.
  Matrix swapped(3, 2, 0.0);
  swapped(1, 0) = swapped(0, 1) = 1.0;
  CHECK(matching_recovers_pattern(host, pattern, swapped));

  Matrix bad(3, 2, 0.0);
  bad(2, 0) = bad(0, 1) = 1.0;
  CHECK_FALSE(matching_recovers_pattern(host, pattern, bad));
}

TEST_CASE("starred methods see complements only above one half") {
  const auto t = make_trial(5, 9, 6, 0.7, 0);
  const auto nm = method_similarity(Method::nm, t.host, t.pattern, 0.7, 1e-4, 1000);
  const auto star = method_similarity(Method::nm_star, t.host, t.pattern, 0.7, 1e-4, 1000);
  const auto direct = method_similarity(Method::nm, complement(t.host), complement(t.pattern), 0.7, 1e-4, 1000);
  CHECK(star == direct);
  CHECK_FALSE(star == nm);
  CHECK(method_similarity(Method::nm_star, t.host, t.pattern, 0.3, 1e-4, 1000) ==
        method_similarity(Method::nm, t.host, t.pattern, 0.3, 1e-4, 1000));
}

TEST_CASE("full pattern is always recovered") {
  SubgraphExperimentConfig cfg;
  cfg.n = 10;
  cfg.m_values = {10};
  cfg.p_values = {0.2, 0.5, 0.8};
  cfg.trials = 5;
  const auto r = run_subgraph_experiment(cfg);
  REQUIRE(r.cells.size() == 5 * 3);
  for (const auto& c : r.cells) CHECK(c.successes == c.trials);
  for (const auto& s : r.summary) {
    CHECK(s.trials == 15);
    CHECK(s.accuracy() == 1.0);
  }
}

TEST_CASE("report layout and determinism") {
  const auto cfg = small_config();
  const auto a = run_subgraph_experiment(cfg);
  REQUIRE(a.cells.size() == 5 * 2 * 2);
  CHECK(a.cells[0].method == Method::nm);
  CHECK(a.cells[0].m == 5);
  CHECK(a.cells[1].p == 0.7);
  CHECK(a.summary.size() == 5);

  auto serial = cfg;
  serial.parallel = false;
  CHECK(without_timing(run_subgraph_experiment(serial)) == without_timing(a));
  CHECK(without_timing(run_subgraph_experiment(cfg)) == without_timing(a));
}

TEST_CASE("CSV and JSON round trips") {
  const auto r = run_subgraph_experiment(small_config());
  std::ostringstream csv, csv_timed, json_timed;
  write_report_csv(csv, r);
  write_report_csv(csv_timed, r, true);
  write_report_json(json_timed, r, true);

  CHECK(csv.str().rfind("method,m,p,trials,successes,accuracy\nNM,5,0.3,4,", 0) == 0);
  CHECK(csv.str().find("\n\nmethod,trials,successes,overall_accuracy\n") != std::string::npos);
  CHECK(csv.str().find("wall_seconds") == std::string::npos);

  std::istringstream in1(csv.str()), in2(csv_timed.str()), in3(json_timed.str());
  CHECK(read_report_csv(in1) == without_timing(r));
  CHECK(read_report_csv(in2) == r);
  CHECK(read_report_json(in3) == r);

  std::ostringstream again;
  write_report_csv(again, run_subgraph_experiment(small_config()));
  CHECK(again.str() == csv.str());
}

TEST_CASE("malformed CSV report") {
  std::istringstream bad("method,m,p,trials,successes,accuracy\nNM,5,0.3,four,1,0.25\n");
  CHECK_THROWS_AS(read_report_csv(bad, "r.csv"), ParseError);
  std::istringstream unknown("method,m,p,trials,successes,accuracy\nXX,5,0.3,4,1,0.25\n");
  CHECK_THROWS_AS(read_report_csv(unknown, "r.csv"), ParseError);
}

TEST_CASE("configuration validation") {
  auto bad = [](auto edit) {
    SubgraphExperimentConfig cfg;
    edit(cfg);
    return cfg;
  };
  CHECK_NOTHROW(SubgraphExperimentConfig{}.validate());
  CHECK_THROWS_AS(bad([](auto& c) { c.m_values = {16}; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](auto& c) { c.m_values = {0}; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](auto& c) { c.m_values.clear(); }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](auto& c) { c.p_values = {1.5}; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](auto& c) { c.trials = 0; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](auto& c) { c.epsilon = 0; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](auto& c) { c.methods.clear(); }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(run_subgraph_experiment(bad([](auto& c) { c.m_values = {20}; })), std::invalid_argument);
}

TEST_CASE("method names") {
  for (Method m : kAllMethods) CHECK(parse_method(method_name(m)) == m);
  CHECK_FALSE(parse_method("nm").has_value());
}
