#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace packcol {

// Runs one CLI invocation. Exit codes: 0 success (including expected
// negative verdicts such as UNSAT), 1 domain or input errors, 2 theorem
// contradiction from scan, 3 solver budget exhausted, 64 usage errors.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace packcol
