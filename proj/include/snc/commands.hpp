#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace snc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitClaimFailed = 2;

/// Runs the `snc` command line. `args` excludes the program name. Results go
/// to `out` (or the -o file), structured errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::istream& in);

}  // namespace snc::cli
