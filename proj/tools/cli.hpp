#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace regmeasure::cli {

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Exit codes: 0 success, 1 bad input, 2 resource
/// cap exceeded, 3 internal check failed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace regmeasure::cli
