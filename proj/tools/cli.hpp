// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace vlcpos::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitChecksFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out` unless --out names a file; diagnostics go to `err` as a single
/// `error: <Kind>: <message>` line.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace vlcpos::cli
