// Copyright 2026 The holopath Authors
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

// Subcommands of the holopath tool. Each cmd_* returns the document it would
// write so tests can inspect it without touching the filesystem.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "holo/acceptance.hpp"
#include "holo/analytic.hpp"
#include "holopath/run_config.hpp"

namespace holopath {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitVerifyFailed = 3,
  kExitIo = 4,
};

/// CSV of the three error functions over [0, pi/2].
std::string cmd_figure1(const RunConfig& config, const holo::ComparisonFunctions& functions = {});

/// One record per (epsilon, kappa), epsilon-major in the given list order.
nlohmann::json cmd_sweep(const RunConfig& config);

/// Solved paths for the configured target and the predicted coefficients.
nlohmann::json cmd_optimize(const RunConfig& config, const holo::ComparisonFunctions& functions = {});

holo::AcceptanceReport cmd_verify(const RunConfig& config, const holo::ComparisonFunctions& functions = {});

/// Writes to `path`, or to `fallback` when the path is empty. Throws IoError.
void write_output(const std::string& path, const std::string& content, std::ostream& fallback);

/// Parses argv (program name first), dispatches and maps failures to exit codes.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const holo::ComparisonFunctions& functions = {});

}  // namespace holopath
