#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pmw::cli {

/// Exit codes of the command-line front end.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;       // selftest failure, I/O error
inline constexpr int kInvalidInput = 2;  // bad flags or parameter values
inline constexpr int kUnstable = 3;      // integration diagnostics tripped

/// Prefix of the environment variables that override config-file values,
/// e.g. PMW_ALPHA2 for --alpha2.
inline constexpr const char* kEnvPrefix = "PMW_";

/// Runs the tool with `args` (without the program name). Precedence, highest
/// first: command-line flags, environment, --config file, built-in defaults.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pmw::cli
