#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gbsect {

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on parse or usage errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gbsect
