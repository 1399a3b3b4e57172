#include "nbm/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace nbm {

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), source_(source), line_(line) {}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    if (end > pos) fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

bool parse_index(std::string_view text, std::uint64_t& value) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

}  // namespace

DirectedGraph read_graph(std::istream& in, const std::string& source) {
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::vector<Color> colors;
  bool colored = false;
  std::vector<std::size_t> edge_lines;

  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto fields = split_fields(line);
    if (fields.empty()) continue;

    auto index_at = [&](std::size_t k, const char* what) -> std::uint64_t {
      std::uint64_t v = 0;
      if (!parse_index(fields[k], v))
        throw ParseError(source, lineno, std::string("expected non-negative integer for ") + what + ", got '" +
                                             std::string(fields[k]) + "'");
      return v;
    };

    const std::string_view keyword = fields[0];
    if (!have_header) {
      if (keyword != "graph" || fields.size() != 2)
        throw ParseError(source, lineno, "expected 'graph <n>' as the first line");
      n = index_at(1, "node count");
      if (n == 0) throw ParseError(source, lineno, "graph must have at least one node");
      colors.assign(n, 0);
      have_header = true;
      continue;
    }
    if (keyword == "edge") {
      if (fields.size() != 3) throw ParseError(source, lineno, "expected 'edge <u> <v>'");
      auto u = index_at(1, "edge source"), v = index_at(2, "edge target");
      if (u >= n || v >= n) throw ParseError(source, lineno, "edge endpoint out of range");
      if (u == v) throw ParseError(source, lineno, "self-loops are not supported");
      edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
      edge_lines.push_back(lineno);
    } else if (keyword == "color") {
      if (fields.size() != 3) throw ParseError(source, lineno, "expected 'color <node> <colorId>'");
      auto node = index_at(1, "node"), c = index_at(2, "color id");
      if (node >= n) throw ParseError(source, lineno, "node out of range");
      colors[node] = static_cast<Color>(c);
      colored = true;
    } else if (keyword == "graph") {
      throw ParseError(source, lineno, "duplicate 'graph' header");
    } else {
      throw ParseError(source, lineno, "unknown directive '" + std::string(keyword) + "'");
    }
  }
  if (!have_header) throw ParseError(source, lineno, "missing 'graph <n>' header");

  // Report duplicates against the line that introduced the repeat.
  std::vector<std::size_t> order(edges.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  for (std::size_t k = 1; k < order.size(); ++k)
    if (edges[order[k]] == edges[order[k - 1]]) throw ParseError(source, edge_lines[order[k]], "duplicate edge");

  std::optional<std::vector<Color>> maybe_colors;
  if (colored) maybe_colors = std::move(colors);
  return DirectedGraph::from_edge_list(n, edges, std::move(maybe_colors));
}

DirectedGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return read_graph(in, path.string());
}

void write_graph(std::ostream& out, const DirectedGraph& g) {
  out << "graph " << g.node_count() << '\n';
  if (g.colored())
    for (std::size_t i = 0; i < g.node_count(); ++i) out << "color " << i << ' ' << g.color(static_cast<NodeId>(i)) << '\n';
  for (const Edge& e : g.edges()) out << "edge " << e.source << ' ' << e.target << '\n';
}

}  // namespace nbm
