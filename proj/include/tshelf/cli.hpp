#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tshelf {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `tshelf` invocation. `args` excludes the program name; `in`
/// backs `--input -`. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace tshelf
