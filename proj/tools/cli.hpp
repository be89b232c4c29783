#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subc::cli {

/// Dispatches the subcommands (table, enumerate, check, cover, limit, rho)
/// and writes the requested format to `out`, diagnostics to `err`.
/// Exit codes: 0 success, 1 invalid input, 2 internal invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subc::cli
