#include "nbm/cli.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nbm/baselines.hpp"
#include "nbm/cnf.hpp"
#include "nbm/graph_io.hpp"
#include "nbm/graph_measures.hpp"
#include "nbm/knn.hpp"
#include "nbm/neighbor_matching.hpp"
#include "nbm/report.hpp"
#include "nbm/subgraph_experiment.hpp"

namespace nbm::cli {

namespace {

/// Invalid flag values and other configuration problems; exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SimilarityFlags {
  std::string method = "nm";
  double epsilon = 1e-4;
  std::size_t max_iterations = 1000;
  std::string complement = "off";
  double density_threshold = 0.5;

  void add_to(CLI::App& app, bool with_method) {
    if (with_method)
      app.add_option("--method", method, "nm, blondel or zv")
          ->check(CLI::IsMember({"nm", "blondel", "zv"}))
          ->capture_default_str();
    app.add_option("--epsilon", epsilon, "Convergence threshold")->capture_default_str();
    app.add_option("--max-iters", max_iterations, "Iteration cap")->capture_default_str();
    app.add_option("--complement", complement, "Complement trick: off, on or auto")
        ->check(CLI::IsMember({"off", "on", "auto"}))
        ->capture_default_str();
    app.add_option("--density-threshold", density_threshold, "Mean density that triggers auto complement")
        ->capture_default_str();
  }

  NMConfig nm_config() const {
    NMConfig cfg;
    cfg.epsilon = epsilon;
    cfg.max_iterations = max_iterations;
    cfg.complement = complement == "on"   ? ComplementMode::on
                     : complement == "auto" ? ComplementMode::automatic
                                            : ComplementMode::off;
    cfg.density_threshold = density_threshold;
    try {
      cfg.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    return cfg;
  }
};

NMResult compute_similarity(const DirectedGraph& a, const DirectedGraph& b, const SimilarityFlags& flags) {
  const NMConfig cfg = flags.nm_config();
  if (flags.method == "nm") return nm_similarity(a, b, cfg);
  const bool flip = complement_active(a, b, cfg);
  const DirectedGraph ga = flip ? complement(a) : a;
  const DirectedGraph gb = flip ? complement(b) : b;
  NMResult r = flags.method == "zv" ? zager_similarity(ga, gb, cfg.epsilon, cfg.max_iterations)
                                    : blondel_similarity(ga, gb, cfg.epsilon, cfg.max_iterations);
  r.complement_applied = flip;
  return r;
}

void print_matrix(std::ostream& out, const SimilarityMatrix& x) {
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) fmt::print(out, "{}{:.6f}", j ? "," : "", x(i, j));
    fmt::print(out, "\n");
  }
}

void print_run_info(std::ostream& err, const NMResult& r) {
  fmt::print(err, "iterations={} converged={} complement={}\n", r.iterations, r.converged, r.complement_applied);
}

// "8-15", "8..15" or "8,10,12" (items may mix both forms).
std::vector<std::size_t> parse_int_list(const std::string& text) {
  std::vector<std::size_t> values;
  std::stringstream ss(text);
  std::string item;
  auto number = [&](const std::string& s) -> std::size_t {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty() || v < 0) throw ConfigError("invalid integer '" + s + "' in '" + text + "'");
    return static_cast<std::size_t>(v);
  };
  while (std::getline(ss, item, ',')) {
    std::size_t sep = item.find("..");
    std::size_t sep_len = 2;
    if (sep == std::string::npos) {
      sep = item.find('-');
      sep_len = 1;
    }
    if (sep == std::string::npos) {
      values.push_back(number(item));
      continue;
    }
    const std::size_t lo = number(item.substr(0, sep)), hi = number(item.substr(sep + sep_len));
    if (lo > hi) throw ConfigError("empty range '" + item + "'");
    for (std::size_t v = lo; v <= hi; ++v) values.push_back(v);
  }
  if (values.empty()) throw ConfigError("empty list");
  return values;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty()) throw ConfigError("invalid number '" + item + "'");
    values.push_back(v);
  }
  if (values.empty()) throw ConfigError("empty list");
  return values;
}

std::vector<Method> parse_methods(const std::string& text) {
  std::vector<Method> methods;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto m = parse_method(item);
    if (!m) throw ConfigError("unknown method '" + item + "' (expected NM, NM*, ZV, ZV*, Blondel)");
    methods.push_back(*m);
  }
  if (methods.empty()) throw ConfigError("empty method list");
  return methods;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Node and graph similarity by neighbor matching"};
  app.require_subcommand(1);

  // node-sim
  auto* node_sim = app.add_subcommand("node-sim", "Print the node similarity matrix of two graphs");
  std::string graph_a, graph_b;
  SimilarityFlags node_flags;
  node_sim->add_option("graph_a", graph_a, "Graph file A (matrix rows)")->required();
  node_sim->add_option("graph_b", graph_b, "Graph file B (matrix columns)")->required();
  node_flags.add_to(*node_sim, true);

  // graph-sim
  auto* graph_sim = app.add_subcommand("graph-sim", "Print the similarity of two graphs");
  SimilarityFlags graph_flags;
  std::string variant_name = "min";
  bool show_matching = false;
  graph_sim->add_option("graph_a", graph_a, "Graph file A")->required();
  graph_sim->add_option("graph_b", graph_b, "Graph file B")->required();
  graph_sim->add_option("--variant", variant_name, "min, max or avg")
      ->check(CLI::IsMember({"min", "max", "avg"}))
      ->capture_default_str();
  graph_sim->add_flag("--show-matching", show_matching, "Also print the optimal node matching");
  graph_flags.add_to(*graph_sim, true);

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Isomorphic subgraph matching experiment");
  SubgraphExperimentConfig exp_cfg;
  std::string m_text = "8-15", p_text = "0.2,0.4,0.6,0.8", methods_text = "NM,NM*,ZV,ZV*,Blondel", out_prefix;
  bool full_scale = false, timing = false, serial = false;
  experiment->add_option("--n", exp_cfg.n, "Host graph size")->capture_default_str();
  experiment->add_option("--m", m_text, "Pattern sizes, e.g. 8-15 or 8,10,12")->capture_default_str();
  experiment->add_option("--p", p_text, "Edge probabilities, comma separated")->capture_default_str();
  experiment->add_option("--trials", exp_cfg.trials, "Trials per (m, p) cell")->capture_default_str();
  experiment->add_flag("--full-scale", full_scale, "Use 500 trials per cell");
  experiment->add_option("--methods", methods_text, "Comma separated: NM,NM*,ZV,ZV*,Blondel")->capture_default_str();
  experiment->add_option("--seed", exp_cfg.seed, "Random seed")->capture_default_str();
  experiment->add_option("--epsilon", exp_cfg.epsilon, "Convergence threshold")->capture_default_str();
  experiment->add_option("--max-iters", exp_cfg.max_iterations, "Iteration cap")->capture_default_str();
  experiment->add_option("--out", out_prefix, "Write <prefix>.csv and <prefix>.json");
  experiment->add_flag("--timing", timing, "Include wall-clock times in the report files");
  experiment->add_flag("--serial", serial, "Run trials on one thread");

  // classify
  auto* classify = app.add_subcommand("classify", "Leave-one-out kNN classification of CNF formulas");
  std::string manifest_path, predictions_path, polarity = "off", classify_variant = "min";
  std::size_t k = 3;
  SimilarityFlags classify_flags;
  classify->add_option("manifest", manifest_path, "Manifest of '<path> <label>' lines")->required();
  classify->add_option("--k", k, "Number of neighbors")->capture_default_str();
  classify->add_option("--polarity", polarity, "Encode literal polarity as edge direction: on or off")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  classify->add_option("--variant", classify_variant, "min, max or avg")
      ->check(CLI::IsMember({"min", "max", "avg"}))
      ->capture_default_str();
  classify->add_option("--out", predictions_path, "Predictions CSV (default: standard output)");
  classify_flags.add_to(*classify, false);

  // gen-corpus
  auto* gen = app.add_subcommand("gen-corpus", "Write a synthetic two-class CNF corpus and its manifest");
  std::string corpus_dir;
  std::size_t per_class = 10;
  std::uint64_t corpus_seed = 1;
  gen->add_option("--dir", corpus_dir, "Output directory")->required();
  gen->add_option("--per-class", per_class, "Instances per class")->capture_default_str();
  gen->add_option("--seed", corpus_seed, "Random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (node_sim->parsed()) {
      const auto a = read_graph_file(graph_a);
      const auto b = read_graph_file(graph_b);
      const NMResult r = compute_similarity(a, b, node_flags);
      print_matrix(out, r.matrix);
      print_run_info(err, r);
      return kExitOk;
    }

    if (graph_sim->parsed()) {
      const auto a = read_graph_file(graph_a);
      const auto b = read_graph_file(graph_b);
      const NMResult r = compute_similarity(a, b, graph_flags);
      const auto variant = *parse_variant(variant_name);
      fmt::print(out, "{:.6f}\n", graph_similarity(r.matrix, variant));
      if (show_matching) {
        const Matching matching = optimal_node_matching(r.matrix);
        for (auto [i, j] : matching.pairs) fmt::print(out, "{} {} {:.6f}\n", i, j, r.matrix(i, j));
      }
      print_run_info(err, r);
      return kExitOk;
    }

    if (experiment->parsed()) {
      exp_cfg.m_values = parse_int_list(m_text);
      exp_cfg.p_values = parse_real_list(p_text);
      exp_cfg.methods = parse_methods(methods_text);
      if (full_scale) exp_cfg.trials = 500;
      exp_cfg.parallel = !serial;
      try {
        exp_cfg.validate();
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
      const ExperimentReport report = run_subgraph_experiment(exp_cfg);
      if (!out_prefix.empty()) {
        auto csv = open_output(out_prefix + ".csv");
        write_report_csv(csv, report, timing);
        auto json = open_output(out_prefix + ".json");
        write_report_json(json, report, timing);
      }
      fmt::print(out, "{:<8} {:>8} {:>10} {:>9} {:>10}\n", "method", "trials", "successes", "accuracy", "time[s]");
      for (const auto& s : report.summary)
        fmt::print(out, "{:<8} {:>8} {:>10} {:>8.1f}% {:>10.2f}\n", method_name(s.method), s.trials, s.successes,
                   100.0 * s.accuracy(), s.wall_seconds);
      return kExitOk;
    }

    if (classify->parsed()) {
      KnnConfig cfg;
      cfg.k = k;
      cfg.similarity = classify_flags.nm_config();
      cfg.polarity = polarity == "on";
      cfg.variant = *parse_variant(classify_variant);
      const auto entries = read_manifest(manifest_path);
      if (entries.size() < 2) throw ConfigError("corpus needs at least two instances");
      if (k == 0 || k >= entries.size()) throw ConfigError("k must satisfy 1 <= k < corpus size");
      std::vector<CnfInstance> corpus;
      for (const auto& e : entries) {
        DimacsParse parsed = parse_dimacs_file(e.path);
        for (const auto& w : parsed.warnings) fmt::print(err, "warning: {}\n", w);
        parsed.instance.label = e.label;
        corpus.push_back(std::move(parsed.instance));
      }
      const KnnResult result = knn_classify(corpus, cfg);
      std::ofstream file;
      if (!predictions_path.empty()) file = open_output(predictions_path);
      std::ostream& sink = predictions_path.empty() ? out : file;
      fmt::print(sink, "path,label,predicted\n");
      for (std::size_t i = 0; i < entries.size(); ++i)
        fmt::print(sink, "{},{},{}\n", entries[i].path.string(), entries[i].label, result.predicted[i]);
      fmt::print(sink, "accuracy,{:.6f}\n", result.accuracy);
      if (!predictions_path.empty()) fmt::print(out, "accuracy,{:.6f}\n", result.accuracy);
      return kExitOk;
    }

    if (gen->parsed()) {
      if (per_class == 0) throw ConfigError("--per-class must be positive");
      std::filesystem::create_directories(corpus_dir);
      Rng rng(corpus_seed);
      auto manifest = open_output((std::filesystem::path(corpus_dir) / "manifest.txt").string());
      for (std::size_t i = 0; i < per_class; ++i) {
        for (const char* family : {"chain", "pigeonhole"}) {
          const CnfInstance f = std::string(family) == "chain" ? make_chain_cnf(rng) : make_pigeonhole_cnf(rng);
          const std::string name = fmt::format("{}_{:02}.cnf", family, i);
          auto file = open_output((std::filesystem::path(corpus_dir) / name).string());
          write_dimacs(file, f);
          fmt::print(manifest, "{} {}\n", name, family);
        }
      }
      fmt::print(out, "wrote {} instances to {}\n", 2 * per_class, corpus_dir);
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitConfigError;
  } catch (const ParseError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitConfigError;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitInputError;
  }
  return kExitConfigError;
}

}  // namespace nbm::cli
