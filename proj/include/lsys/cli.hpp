#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lsys::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kDomain = 3, kUnsupported = 4 };

/// Runs one command line (without the program name). Payloads go to `out`,
/// diagnostics to `err` as a JSON error document.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lsys::cli
