#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gammalab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses args (without the program name), runs the command and returns the
/// process exit code: 0 on success, 1 when a check fails, 2 on usage or domain errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gammalab
