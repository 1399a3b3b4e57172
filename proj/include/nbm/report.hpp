#pragma once

#include <iosfwd>
#include <string>

#include "nbm/subgraph_experiment.hpp"

namespace nbm {

// CSV layout:
//
//   method,m,p,trials,successes,accuracy
//   NM,8,0.2,50,13,0.26
//   ...
//   <blank line>
//   method,trials,successes,overall_accuracy[,wall_seconds]
//   NM,1600,437,0.273125
//
// Wall-clock times are written only when `with_timing` is set, so reports of
// repeated runs compare byte-for-byte. Accuracy columns are informational and
// recomputed on read.
void write_report_csv(std::ostream& out, const ExperimentReport& report, bool with_timing = false);
ExperimentReport read_report_csv(std::istream& in, const std::string& source = "<stream>");

/// JSON mirror: {"cells": [...], "summary": [...]} with the same fields.
void write_report_json(std::ostream& out, const ExperimentReport& report, bool with_timing = false);
ExperimentReport read_report_json(std::istream& in);

}  // namespace nbm
