#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace perfmat::cli {

enum ExitCode : int {
  kSuccess = 0,
  kViolation = 1,  // a mathematical check failed
  kUsageError = 2,
  kGuardExceeded = 3,
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool out_is_terminal = false;
};

inline constexpr int kPermanentGuard = 24;

/// Runs the command line `args` (program name excluded) and returns the
/// process exit code.
int run(const std::vector<std::string>& args, Streams io);

}  // namespace perfmat::cli
