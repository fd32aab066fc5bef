// cli.hpp -- the upword command line, callable in-process

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace upw::cli {

/// Exit codes shared by every subcommand.
enum Exit : int { Success = 0, Negative = 1, Usage = 2, InternalError = 3 };

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace upw::cli
