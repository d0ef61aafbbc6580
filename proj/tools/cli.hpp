#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace certrig::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name).  Output goes to `out`,
// diagnostics to `err`.  Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace certrig::cli
