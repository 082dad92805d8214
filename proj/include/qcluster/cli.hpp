// Command-line entry points.  Every subcommand prints sorted-key JSON or a
// plain table on `out`; diagnostics go to `err`.
#pragma once

#include "qcluster/report.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace qcluster {

enum ExitCode { kExitPass = 0, kExitFailure = 1, kExitUsage = 2 };

/// Reports of `verify` for target gl1, gl2 or all, in run order.  Mathematical
/// errors become fail records.
std::vector<Report> run_verify(const std::string& target, int ell_window, int depth, int threads = 1);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcluster
