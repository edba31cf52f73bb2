#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace foldse::cli {

// Exit statuses of the command-line front end.
inline constexpr int kOk = 0;
inline constexpr int kRuntimeError = 1;
inline constexpr int kUsageError = 2;

// Runs one invocation. `args` excludes the program name. Normal output goes
// to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace foldse::cli
