#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace koszul::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotKoszul = 1;  // only with --exit-status
inline constexpr int kExitInput = 2;
inline constexpr int kExitHypothesis = 3;
inline constexpr int kExitInternal = 4;

// Runs one command line (args excludes the program name). Reports go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string tool_version();

}  // namespace koszul::cli
