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

// Runs the full acceptance suite and prints one line per criterion.
// Usage: holo_acceptance [--fast] [--seed N]

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "holo/acceptance.hpp"

int main(int argc, char** argv) {
  holo::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--fast") {
      options.level = holo::VerifyLevel::kFast;
    } else if (arg == "--seed" && i + 1 < argc) {
      options.seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::cerr << "usage: holo_acceptance [--fast] [--seed N]\n";
      return 2;
    }
  }
  const holo::AcceptanceReport report = holo::run_acceptance(options);
  holo::print_report(std::cout, report);
  return report.all_passed() ? 0 : 1;
}
