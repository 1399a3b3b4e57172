#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "nbm/graph.hpp"

namespace nbm {

/// Malformed input file. what() reads "<source>:<line>: <message>".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& message);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

// Graph text format:
//
//   # comment
//   graph <n>
//   color <node> <colorId>     (optional; uncolored nodes default to 0)
//   edge <u> <v>               (directed u -> v)
//
// `graph` must be the first non-comment line. Nodes are 0-based.
DirectedGraph read_graph(std::istream& in, const std::string& source = "<stream>");
DirectedGraph read_graph_file(const std::filesystem::path& path);

void write_graph(std::ostream& out, const DirectedGraph& g);

}  // namespace nbm
