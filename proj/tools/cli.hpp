#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spectool::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolations = 1,
  kExitParseError = 2,
  kExitConfigError = 3,
};

/// Runs one CLI invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace spectool::cli
