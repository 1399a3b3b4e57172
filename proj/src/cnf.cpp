#include "nbm/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "nbm/graph_io.hpp"

namespace nbm {

DimacsParse parse_dimacs(std::istream& in, const std::string& source) {
  DimacsParse result;
  CnfInstance& f = result.instance;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  std::vector<int> current;
  std::size_t current_start = 0;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first[0] == 'c') continue;
    if (first[0] == '%') break;
    if (first == "p") {
      if (have_header) throw ParseError(source, lineno, "duplicate problem line");
      std::string format;
      long long vars = -1, clauses = -1;
      if (!(fields >> format >> vars >> clauses) || format != "cnf" || vars < 0 || clauses < 0)
        throw ParseError(source, lineno, "malformed problem line, expected 'p cnf <vars> <clauses>'");
      f.variables = static_cast<std::size_t>(vars);
      declared_clauses = static_cast<std::size_t>(clauses);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(source, lineno, "clause data before 'p cnf' header");

    fields.clear();
    fields.seekg(0);
    std::string token;
    while (fields >> token) {
      long long lit = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), lit);
      if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(source, lineno, "invalid literal '" + token + "'");
      if (lit == 0) {
        if (current.empty()) throw ParseError(source, lineno, "empty clause");
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (static_cast<unsigned long long>(std::llabs(lit)) > f.variables)
        throw ParseError(source, lineno, "literal " + token + " exceeds declared variable count");
      if (current.empty()) current_start = lineno;
      current.push_back(static_cast<int>(lit));
    }
  }
  if (!have_header) throw ParseError(source, lineno, "missing 'p cnf' header");
  if (!current.empty()) {
    result.warnings.push_back(source + ":" + std::to_string(current_start) + ": final clause not terminated by 0");
    f.clauses.push_back(std::move(current));
  }
  if (f.clauses.size() != declared_clauses)
    result.warnings.push_back(source + ": header declares " + std::to_string(declared_clauses) + " clauses, found " +
                              std::to_string(f.clauses.size()));
  return result;
}

DimacsParse parse_dimacs_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return parse_dimacs(in, path.string());
}

void write_dimacs(std::ostream& out, const CnfInstance& f) {
  out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
}

DirectedGraph variable_clause_graph(const CnfInstance& f, bool polarity) {
  const std::size_t n = f.variables + f.clauses.size();
  std::set<Edge> edges;
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    const auto clause_node = static_cast<NodeId>(f.variables + c);
    for (int lit : f.clauses[c]) {
      const auto var_node = static_cast<NodeId>(std::abs(lit) - 1);
      if (!polarity || lit > 0) edges.insert({var_node, clause_node});
      if (!polarity || lit < 0) edges.insert({clause_node, var_node});
    }
  }
  std::vector<Color> colors(n, 0);
  std::fill(colors.begin() + static_cast<std::ptrdiff_t>(f.variables), colors.end(), Color{1});
  std::vector<Edge> list(edges.begin(), edges.end());
  return DirectedGraph::from_edge_list(n, list, std::move(colors));
}

namespace {

// Random variable renaming and clause order; the formula is unchanged up to
// isomorphism.
void scramble(CnfInstance& f, Rng& rng) {
  std::vector<int> rename(f.variables);
  std::iota(rename.begin(), rename.end(), 1);
  std::shuffle(rename.begin(), rename.end(), rng);
  for (auto& clause : f.clauses)
    for (int& lit : clause) lit = lit > 0 ? rename[lit - 1] : -rename[-lit - 1];
  std::shuffle(f.clauses.begin(), f.clauses.end(), rng);
}

}  // namespace

CnfInstance make_chain_cnf(Rng& rng) {
  CnfInstance f;
  f.variables = std::uniform_int_distribution<std::size_t>(12, 24)(rng);
  f.clauses.push_back({1});
  for (int v = 1; v < static_cast<int>(f.variables); ++v) f.clauses.push_back({-v, v + 1});
  scramble(f, rng);
  return f;
}

CnfInstance make_pigeonhole_cnf(Rng& rng) {
  const int holes = std::uniform_int_distribution<int>(3, 4)(rng);
  const int pigeons = holes + 1;
  auto var = [holes](int pigeon, int hole) { return pigeon * holes + hole + 1; };
  CnfInstance f;
  f.variables = static_cast<std::size_t>(pigeons * holes);
  for (int p = 0; p < pigeons; ++p) {
    std::vector<int> somewhere;
    for (int h = 0; h < holes; ++h) somewhere.push_back(var(p, h));
    f.clauses.push_back(std::move(somewhere));
  }
  std::vector<std::vector<int>> at_most_one;
  for (int h = 0; h < holes; ++h)
    for (int p = 0; p < pigeons; ++p)
      for (int q = p + 1; q < pigeons; ++q) at_most_one.push_back({-var(p, h), -var(q, h)});
  std::shuffle(at_most_one.begin(), at_most_one.end(), rng);
  const auto dropped = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
  f.clauses.insert(f.clauses.end(), at_most_one.begin() + static_cast<std::ptrdiff_t>(dropped), at_most_one.end());
  scramble(f, rng);
  return f;
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw ParseError(manifest.string(), 0, "cannot open file");
  const auto base = manifest.parent_path();
  std::vector<ManifestEntry> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string path, label, extra;
    if (!(fields >> path)) continue;
    if (!(fields >> label)) throw ParseError(manifest.string(), lineno, "missing class label for '" + path + "'");
    if (fields >> extra) throw ParseError(manifest.string(), lineno, "expected '<path> <classLabel>'");
    std::filesystem::path p(path);
    entries.push_back({p.is_absolute() ? p : base / p, label});
  }
  return entries;
}

}  // namespace nbm
