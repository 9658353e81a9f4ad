#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sigatoms/cli.hpp"

namespace sigatoms::testing {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

inline CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

inline std::string instance_path(const std::string& name) {
  return std::string(SIGATOMS_INSTANCE_DIR) + "/" + name;
}

/// Writes `body` to a scratch file and returns its path.
inline std::string scratch_instance(const std::string& name, const std::string& body) {
  auto path = std::string(SIGATOMS_SCRATCH_DIR) + "/" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace sigatoms::testing
