#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quadsyn::cli {

enum ExitCode : int { kOk = 0, kMalformed = 2, kDisagreement = 3 };

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadsyn::cli
