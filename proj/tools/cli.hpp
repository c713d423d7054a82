#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace frobgen::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kResource = 3,
  kInternal = 4,
};

/// Runs one `frobgen` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frobgen::cli
