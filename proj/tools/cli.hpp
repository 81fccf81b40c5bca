#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace overlap {

/// Runs the command line front end on the given arguments (program name
/// excluded).  Reports go to out, diagnostics to err.  Returns the process
/// exit code: 0 for success or a yes answer, 1 for a no or invalid answer,
/// 2 for usage or input errors, 3 when a search budget is exceeded.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace overlap
