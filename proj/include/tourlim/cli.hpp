#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tourlim::cli {

/// Runs one command line (without the program name). Primary output goes to
/// `out` unless --output is given; diagnostics go to `err`.
/// Returns 0 on success, 1 when a check or validation fails and 2 on usage
/// or input-format errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tourlim::cli
