#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orebasis::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 on success, 1 on a verification mismatch, 2 on parse or precondition errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orebasis::cli
