#include "nbm/report.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <vector>

#include "nbm/graph_io.hpp"

namespace nbm {

namespace {

const char* kCellHeader = "method,m,p,trials,successes,accuracy";
const char* kSummaryHeader = "method,trials,successes,overall_accuracy";

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

Method method_or_throw(const std::string& name, const std::string& source, std::size_t line) {
  auto m = parse_method(name);
  if (!m) throw ParseError(source, line, "unknown method '" + name + "'");
  return *m;
}

std::size_t count_or_throw(const std::string& text, const std::string& source, std::size_t line) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-')
    throw ParseError(source, line, "expected a count, got '" + text + "'");
  return static_cast<std::size_t>(v);
}

double real_or_throw(const std::string& text, const std::string& source, std::size_t line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw ParseError(source, line, "expected a number, got '" + text + "'");
  return v;
}

}  // namespace

void write_report_csv(std::ostream& out, const ExperimentReport& report, bool with_timing) {
  fmt::print(out, "{}\n", kCellHeader);
  for (const CellResult& c : report.cells)
    fmt::print(out, "{},{},{},{},{},{}\n", method_name(c.method), c.m, c.p, c.trials, c.successes, c.accuracy());
  fmt::print(out, "\n{}{}\n", kSummaryHeader, with_timing ? ",wall_seconds" : "");
  for (const MethodSummary& s : report.summary) {
    fmt::print(out, "{},{},{},{}", method_name(s.method), s.trials, s.successes, s.accuracy());
    if (with_timing) fmt::print(out, ",{}", s.wall_seconds);
    fmt::print(out, "\n");
  }
}

ExperimentReport read_report_csv(std::istream& in, const std::string& source) {
  ExperimentReport report;
  std::string line;
  std::size_t lineno = 0;
  enum class Section { start, cells, summary_header, summary } section = Section::start;
  bool timing = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    switch (section) {
      case Section::start:
        if (line != kCellHeader) throw ParseError(source, lineno, "expected cell header");
        section = Section::cells;
        continue;
      case Section::cells: {
        if (line.empty()) {
          section = Section::summary_header;
          continue;
        }
        auto f = split_csv(line);
        if (f.size() != 6) throw ParseError(source, lineno, "expected 6 fields");
        CellResult c;
        c.method = method_or_throw(f[0], source, lineno);
        c.m = count_or_throw(f[1], source, lineno);
        c.p = real_or_throw(f[2], source, lineno);
        c.trials = count_or_throw(f[3], source, lineno);
        c.successes = count_or_throw(f[4], source, lineno);
        if (c.successes > c.trials) throw ParseError(source, lineno, "successes exceed trials");
        report.cells.push_back(c);
        continue;
      }
      case Section::summary_header:
        if (line == kSummaryHeader) {
          timing = false;
        } else if (line == std::string(kSummaryHeader) + ",wall_seconds") {
          timing = true;
        } else {
          throw ParseError(source, lineno, "expected summary header");
        }
        section = Section::summary;
        continue;
      case Section::summary: {
        if (line.empty()) continue;
        auto f = split_csv(line);
        if (f.size() != (timing ? 5u : 4u)) throw ParseError(source, lineno, "wrong number of summary fields");
        MethodSummary s;
        s.method = method_or_throw(f[0], source, lineno);
        s.trials = count_or_throw(f[1], source, lineno);
        s.successes = count_or_throw(f[2], source, lineno);
        if (timing) s.wall_seconds = real_or_throw(f[4], source, lineno);
        report.summary.push_back(s);
        continue;
      }
    }
  }
  if (section == Section::start) throw ParseError(source, lineno, "empty report");
  return report;
}

void write_report_json(std::ostream& out, const ExperimentReport& report, bool with_timing) {
  nlohmann::ordered_json j;
  j["cells"] = nlohmann::ordered_json::array();
  for (const CellResult& c : report.cells)
    j["cells"].push_back({{"method", method_name(c.method)},
                          {"m", c.m},
                          {"p", c.p},
                          {"trials", c.trials},
                          {"successes", c.successes},
                          {"accuracy", c.accuracy()}});
  j["summary"] = nlohmann::ordered_json::array();
  for (const MethodSummary& s : report.summary) {
    nlohmann::ordered_json e{{"method", method_name(s.method)},
                             {"trials", s.trials},
                             {"successes", s.successes},
                             {"overall_accuracy", s.accuracy()}};
    if (with_timing) e["wall_seconds"] = s.wall_seconds;
    j["summary"].push_back(std::move(e));
  }
  out << j.dump(2) << '\n';
}

ExperimentReport read_report_json(std::istream& in) {
  const auto j = nlohmann::json::parse(in);
  ExperimentReport report;
  auto method = [](const nlohmann::json& e) {
    auto m = parse_method(e.at("method").get<std::string>());
    if (!m) throw std::invalid_argument("unknown method in report");
    return *m;
  };
  for (const auto& e : j.at("cells"))
    report.cells.push_back({method(e), e.at("m").get<std::size_t>(), e.at("p").get<double>(),
                            e.at("trials").get<std::size_t>(), e.at("successes").get<std::size_t>()});
  for (const auto& e : j.at("summary"))
    report.summary.push_back({method(e), e.at("trials").get<std::size_t>(), e.at("successes").get<std::size_t>(),
                              e.value("wall_seconds", 0.0)});
  return report;
}

}  // namespace nbm
