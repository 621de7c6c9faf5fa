#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lacalc::cli {

/// Runs one command line. Returns 0 on success, 1 when a mathematical check
/// fails and 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lacalc::cli
