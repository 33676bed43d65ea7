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

// Run configuration shared by every subcommand. Values come from an optional
// key=value file first and are then overridden by explicit flags; both go
// through set_key(). Angles are in units of pi.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "holo/acceptance.hpp"
#include "holo/qmath.hpp"

namespace holopath {

enum class Scheme { kTwoLoop, kSingleLoop, kSingleShot };

std::string_view scheme_name(Scheme s);
Scheme parse_scheme(std::string_view text);

/// Bad flag, key or value. Exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable input or unwritable output. Exit code 4.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::size_t samples = 101;
  /// Output path; empty writes to stdout.
  std::string out;
  Scheme scheme = Scheme::kTwoLoop;
  double theta_gate = 0.5;
  holo::Vec3 axis{0.0, 0.0, 1.0};
  /// Imposed decomposition phase; empty leaves it free.
  std::optional<double> phi_b = 1.0;
  bool balanced = true;
  std::vector<double> epsilon{1e-3};
  std::vector<double> kappa{0.0};
  std::uint64_t seed = 20170601;
  holo::VerifyLevel level = holo::VerifyLevel::kFull;
  /// Raw scheme parameters replacing the solved path:
  /// two-loop theta1,psi1,phi1,theta2,psi2,phi2; single-loop theta,psi,phi,phi';
  /// single-shot alpha,beta0,beta1,gamma.
  std::vector<double> params;
};

/// Keys accepted by set_key(), in flag spelling without the leading dashes.
const std::vector<std::string>& config_keys();

/// Parses and stores one value. Throws UsageError on an unknown key or a
/// malformed or out-of-range value.
void set_key(RunConfig& config, std::string_view key, std::string_view value);

/// One key=value per line; '#' starts a comment; blank lines are ignored.
void apply_config_text(RunConfig& config, std::string_view text, std::string_view origin = "config");
/// Throws IoError if the file cannot be read.
void apply_config_file(RunConfig& config, const std::string& path);

/// Comma-separated doubles; empty items are rejected.
std::vector<double> parse_list(std::string_view text);

}  // namespace holopath
