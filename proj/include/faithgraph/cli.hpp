#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace faithgraph::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Exit codes shared by every verb.
enum ExitCode : int {
  kYes = 0,
  kNo = 1,
  kUsage = 2,
  kInternal = 3,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace faithgraph::cli
