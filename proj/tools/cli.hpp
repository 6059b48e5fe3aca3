#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace replan::cli {

/// Runs one command-line invocation; `args` excludes the program name.
/// Results go to `out` or to `--out` files, diagnostics to `err`.
/// Exit codes: 0 success, 1 infeasible/inapplicable outcome, 2 usage or
/// input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace replan::cli
