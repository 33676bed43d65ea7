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

// End-to-end verification suite: analytic-vs-exact reproduction of the
// second-order fidelities, the optimal-path conditions, oracle equivalence
// and structural invariants. Shared by `holopath verify` and the acceptance
// test binary.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "holo/analytic.hpp"

namespace holo {

enum class VerifyLevel {
  kFast,  // reduced oracle sample
  kFull,  // 10^2 oracle points per scheme at 10^5 steps
};

struct AcceptanceOptions {
  VerifyLevel level = VerifyLevel::kFull;
  std::uint64_t seed = 20170601;
  /// Substitutable for negative controls.
  ComparisonFunctions functions;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double required = 0.0;
  /// How `measured` is compared to `required`, e.g. "<=" or ">=".
  std::string relation;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceReport {
  std::uint64_t seed = 0;
  VerifyLevel level = VerifyLevel::kFull;
  std::vector<CriterionResult> criteria;

  bool all_passed() const;
};

AcceptanceReport run_acceptance(const AcceptanceOptions& options = {});

/// One line per criterion plus a summary line.
void print_report(std::ostream& os, const AcceptanceReport& report);

}  // namespace holo
