#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace warpstab::cli {

/// Runs one invocation; args exclude the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace warpstab::cli
