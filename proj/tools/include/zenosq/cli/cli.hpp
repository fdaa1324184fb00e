#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace zenosq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

// Entry point of the `zenosq` tool. args excludes the program name. Results go
// to `out` (or the --out file); diagnostics are single lines on `err`.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace zenosq::cli
