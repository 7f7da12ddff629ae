#pragma once

#include <iosfwd>

namespace spectrachrome {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitResource = 2,
  kExitNumerical = 3,
};

/// Entry point of the `spectrachrome` tool; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spectrachrome
