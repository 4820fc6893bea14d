#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace extinf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kSeedEnvVar = "EXTINF_BENCH_SEED";

/// Runs the command line `args` (args[0] is the program name) writing
/// normal output to `out` and diagnostics to `err`. Returns the exit code:
/// 0 success, 1 runtime failure, 2 usage error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace extinf::cli
