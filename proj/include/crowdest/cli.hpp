#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crowdest {

/// Runs one CLI invocation. `args` excludes the program name. Results go to
/// `out` (or the --out file), diagnostics to `err`. Exit codes: 0 success,
/// 2 usage error, 3 domain error, 4 internal invariant failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crowdest
