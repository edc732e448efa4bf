// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "lz/checks/battery.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace lz::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one invocation; `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`. In JSON mode domain errors are reported on
/// `out` as {"error": {...}}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Named cases for the command-line examples, run in-process.
std::vector<checks::NamedCheck> cli_checks();

} // namespace lz::cli
