#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace netdyn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Results go to `out`
/// (or the --out file), diagnostics to `err`. Returns 0 on success, 1 on a
/// domain error, 2 on a usage error. Nothing is written to an --out file
/// unless the command succeeds.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace netdyn::cli
