#pragma once

#include <string>
#include <vector>

namespace tropsym::cli {

struct Result {
  int exit_code = 0;
  std::string output;
};

/// Runs one command. `args` excludes the program name. Exit codes: 0 on
/// success, 1 on domain errors, 2 on malformed input. Errors are reported
/// as JSON on the output as well.
Result run(const std::vector<std::string>& args);

}  // namespace tropsym::cli
