// Copyright 2026 The sqent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <span>
#include <string>

namespace sqent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name. Returns 0 on
/// success, 2 on usage errors and 1 when a computation or input file fails.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace sqent::cli
