#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace locweil {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitDomain = 2,
  kExitResource = 3,
  kExitParse = 64,
};

/// Runs one command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace locweil
