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

// Curves of the three scheme error functions over the rotation angle and
// their CSV rendering.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "holo/analytic.hpp"

namespace holo {

struct Figure1Row {
  double theta = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;
  double f3 = 0.0;
};

/// samples >= 2 rows with theta uniformly spanning [0, pi/2], endpoints exact.
std::vector<Figure1Row> figure1_curves(std::size_t samples, const ComparisonFunctions& functions = {});

/// Header `theta,f1,f2,f3`, 15 significant digits, '.' decimal point, '\n' line ends.
std::string figure1_csv(const std::vector<Figure1Row>& rows);

/// Parses figure1_csv() output; throws std::runtime_error on malformed input.
std::vector<Figure1Row> parse_figure1_csv(std::string_view csv);

}  // namespace holo
