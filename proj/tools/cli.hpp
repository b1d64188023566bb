#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace extspec::cli {

enum ExitCode : int {
  kOk = 0,
  kNumeric = 2,
  kDegenerate = 3,
  kGroup = 4,
  kUsage = 64,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace extspec::cli
