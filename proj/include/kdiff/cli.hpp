#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kdiff::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kAuditMismatch = 3 };

/// Runs one `kdiff` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kdiff::cli
