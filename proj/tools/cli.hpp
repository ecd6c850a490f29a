#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ternrec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;   // a sweep verdict was "fail"
inline constexpr int kExitUsage = 2;  // bad flags or arguments

/// Subcommands: sweep, npf, rep, series, term, registry.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience for tests: args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ternrec::cli
