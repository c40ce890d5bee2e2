// Copyright 2026 The vbsswap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "run_config.hpp"

namespace vbsswap::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

// Largest N accepted by scan.
inline constexpr std::size_t kScanMaxNodes = 10'000'000;

/// Each command writes its report to `out` and returns an exit code. They
/// throw UsageError or BudgetExceeded; run_cli maps those to exit codes.
int cmd_swap(const RunConfig& config, std::ostream& out);
int cmd_scan(const RunConfig& config, std::ostream& out);
int cmd_sample(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);

/// Full front end: parses `args` (without the program name), loads --config,
/// dispatches, and writes to --out or `out`. Errors go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Renders a double exactly as the JSON emitter does, so CSV and JSON agree.
std::string format_number(double x);

}  // namespace vbsswap::cli
