#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace phasesfs::cli {

/// Parses and executes one command line (without the program name) and
/// writes the requested table to `out` (or to the file named by --out).
/// Diagnostics go to `err`. Returns the process exit code: 0 on success,
/// 2 for invalid arguments, 3 for numerical failures.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace phasesfs::cli
