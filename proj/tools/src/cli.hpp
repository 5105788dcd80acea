#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fpbl::cli {

enum ExitCode : int {
  kOk = 0,
  kFail = 1,
  kRefused = 2,
  kUsage = 3,
  kError = 4,
};

/// Runs the command line `args` (without the program name). Tables go to
/// `out` unless --out is given; diagnostics and PASS/FAIL lines go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fpbl::cli
