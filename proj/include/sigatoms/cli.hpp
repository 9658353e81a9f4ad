#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sigatoms/error.hpp"

namespace sigatoms::cli {

enum ExitCode : int {
  kOk = 0,
  kViolations = 1,  // verify/roundtrip found problems
  kUsage = 2,       // bad arguments or instance file
  kMeasure = 3,     // measure inconsistent, underdetermined or otherwise unusable
  kGuard = 4,       // enumeration or size guard exceeded
};

int exit_code_for(ErrorKind kind);

/// Runs one CLI invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigatoms::cli
