#pragma once

#include <iosfwd>

namespace nbm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitConfigError = 2;

/// Entry point of the `nmsim` tool. Subcommands: node-sim, graph-sim,
/// experiment, classify, gen-corpus. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nbm::cli
