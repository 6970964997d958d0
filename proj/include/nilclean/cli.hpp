// Copyright 2026 The nilclean authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilclean {

/// Runs one CLI invocation. Result JSON goes to `out`, diagnostics and the
/// run report to `err`; `in` backs subcommands that read stdin. Exit codes:
/// 0 success, 1 malformed input or internal error, 2 negative mathematical
/// outcome (not nil-clean, oracle witness absent, certificate invalid).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace nilclean
