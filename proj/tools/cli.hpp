#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trihull::cli {

enum ExitCode : int {
  feasible = 0,
  witness = 1,
  inconclusive = 2,
  usage = 3,
  parse_error = 4,
  verify_failed = 5,
};

/// Full command line without the program name. The report goes to `out`
/// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trihull::cli
