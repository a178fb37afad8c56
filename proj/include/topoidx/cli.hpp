#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace topoidx::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

enum ExitCode : int { kSuccess = 0, kInputError = 1, kUsageError = 2 };

/// Parses argv, runs one subcommand and writes the report to `out`.
/// Diagnostics go to `err`. Violations found by a search still exit 0.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace topoidx::cli
