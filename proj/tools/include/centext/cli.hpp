#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace centext::cli {

/// Runs one command line (without the program name). The report goes to
/// `out`, diagnostics to `err`. Returns 0 when every check passes, 1 when a
/// check fails (the report is still written) and 2 on input errors.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace centext::cli
