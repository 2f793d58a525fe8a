#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fca {

// Runs the command-line tool. `args` excludes the program name. The report is
// written to `out` only after the whole command succeeded; diagnostics go to
// `err`. Returns the process exit code: 0 success, 1 parse/usage error,
// 2 I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fca
