#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monoalg {

/// Runs the command line `args` (args[0] is the program name). Input comes
/// from --input or `in`; reports go to `out`, diagnostics to `err`.
/// Exit codes: 0 success, 1 usage or parse error, 2 precondition violation.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace monoalg
