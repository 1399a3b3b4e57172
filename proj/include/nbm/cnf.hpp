#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "nbm/graph.hpp"

namespace nbm {

/// CNF formula. Literals are non-zero; |literal| <= variables.
struct CnfInstance {
  std::size_t variables = 0;
  std::vector<std::vector<int>> clauses;
  std::string label;

  bool operator==(const CnfInstance&) const = default;
};

struct DimacsParse {
  CnfInstance instance;
  std::vector<std::string> warnings;
};

/// Reads DIMACS CNF: `c` comment lines, a `p cnf <vars> <clauses>` header,
/// zero-terminated clauses (which may span lines). A `%` line ends the
/// input. A clause-count mismatch or a final clause missing its 0 is
/// reported as a warning. Throws ParseError on a missing or malformed
/// header, a literal out of range, or an empty clause.
DimacsParse parse_dimacs(std::istream& in, const std::string& source = "<stream>");
DimacsParse parse_dimacs_file(const std::filesystem::path& path);

void write_dimacs(std::ostream& out, const CnfInstance& f);

/// Bipartite colored graph: variable v-1 is node v-1 (color 0), clause c is
/// node variables + c (color 1). With polarity off each occurrence links
/// variable and clause in both directions; with polarity on a positive
/// literal gives variable -> clause and a negative one clause -> variable.
DirectedGraph variable_clause_graph(const CnfInstance& f, bool polarity = false);

/// Implication chain x1, x1 -> x2, ..., with 12-24 variables, randomly
/// renamed and shuffled.
CnfInstance make_chain_cnf(Rng& rng);

/// Pigeonhole principle for h+1 pigeons and h in {3,4} holes, with up to two
/// at-most-one clauses dropped, randomly renamed and shuffled.
CnfInstance make_pigeonhole_cnf(Rng& rng);

struct ManifestEntry {
  std::filesystem::path path;
  std::string label;
};

/// Lines `<path> <classLabel>`; `#` starts a comment. Relative paths are
/// resolved against the manifest's directory. Throws ParseError on a line
/// without a label.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& manifest);

}  // namespace nbm
