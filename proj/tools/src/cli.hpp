#pragma once

#include <ostream>

namespace regionbound::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPolicy = 3;

/// Parses argv (argv[0] is the program name), runs the command and returns
/// the process exit code. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace regionbound::cli
