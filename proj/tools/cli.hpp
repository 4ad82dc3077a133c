#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliquechroma::cli {

/// Process exit codes. Stable across releases.
enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kUsage = 2,
  kResource = 3,
};

inline constexpr const char *kToolVersion = "0.1.0";

/// Runs one command line (args[0] is the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace cliquechroma::cli
