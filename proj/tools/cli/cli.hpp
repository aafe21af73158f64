#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pvc::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitNo = 1,
  kExitInput = 2,
  kExitCapacity = 3,
  kExitInternal = 4,
};

// Runs one command. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pvc::cli
