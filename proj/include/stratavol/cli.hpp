#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stratavol::cli {

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 on success, 1 when a verification fails, other nonzero
/// codes for usage and computation errors. Reads STRATAVOL_CACHE.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stratavol::cli
