#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zeroruns::cli {

/// Exit statuses of `run`.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verify_failed = 1;
inline constexpr int exit_usage = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zeroruns::cli
