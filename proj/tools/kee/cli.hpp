#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kee::cli {

enum ExitCode : int { kOk = 0, kUserError = 1, kInconsistency = 2 };

// Entry point of the `kee` tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kee::cli
