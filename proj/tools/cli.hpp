#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace powerpoly::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInputError = 2,
  kUnsupported = 3,
};

/// Runs one `powerpoly` invocation; `args` excludes the program name.
/// Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace powerpoly::cli
