#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilsemi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;

/// Subcommands: count, table, npq, lpq, kpq, bound, verify.
/// `args` excludes the program name.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

int run(int argc, char** argv);

}  // namespace nilsemi::cli
