#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace movcone::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand. args excludes the program name. Human-readable output
// goes to `out`, diagnostics to `err`; JSON is written only to --out paths.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace movcone::cli
