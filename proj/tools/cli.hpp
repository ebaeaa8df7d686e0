#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypercol::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;       ///< uncolorable, no extension, failed check
inline constexpr int kExitInput = 2;    ///< unreadable or invalid input, bad flags
inline constexpr int kExitPromise = 3;  ///< promise violation
inline constexpr int kExitCap = 4;      ///< search cap exceeded or no applicable case

/// Runs the command line `args` (args[0] is the program name). Reports go
/// to `out`, diagnostics and traces to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hypercol::cli
