// Serial reference vs OpenMP kernels: one NM update on random graph pairs,
// and one cell of the subgraph experiment.
#include <fmt/core.h>
#include <omp.h>

#include <chrono>

#include "nbm/neighbor_matching.hpp"
#include "nbm/subgraph_experiment.hpp"

namespace {

template <typename F>
double seconds_per_call(F&& f, int repeats) {
  f();
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < repeats; ++r) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / repeats;
}

}  // namespace

int main() {
  fmt::print("OpenMP threads: {}\n", omp_get_max_threads());

  for (std::size_t n : {30, 60, 120}) {
    nbm::Rng rng(n);
    const auto a = nbm::erdos_renyi(n, 0.3, rng);
    const auto b = nbm::erdos_renyi(n, 0.3, rng);
    const auto x = nbm::nm_step(a, b, nbm::nm_initial(a, b));
    const int repeats = n <= 60 ? 10 : 3;
    const double serial = seconds_per_call([&] { return nbm::nm_step_serial(a, b, x); }, repeats);
    const double parallel = seconds_per_call([&] { return nbm::nm_step(a, b, x); }, repeats);
    const bool same = nbm::nm_step_serial(a, b, x) == nbm::nm_step(a, b, x);
    fmt::print("nm_step n={:<4} serial {:9.4f} ms  parallel {:9.4f} ms  speedup {:5.2f}  identical={}\n", n,
               1e3 * serial, 1e3 * parallel, serial / parallel, same);
  }

  nbm::SubgraphExperimentConfig cfg;
  cfg.m_values = {12};
  cfg.p_values = {0.4};
  cfg.trials = 20;
  cfg.methods = {nbm::Method::nm};
  for (bool parallel : {false, true}) {
    cfg.parallel = parallel;
    const auto report = nbm::run_subgraph_experiment(cfg);
    fmt::print("experiment cell (NM, m=12, p=0.4, 20 trials) {:<8} {:8.3f} s  successes={}\n",
               parallel ? "parallel" : "serial", report.summary[0].wall_seconds, report.summary[0].successes);
  }
  return 0;
}
