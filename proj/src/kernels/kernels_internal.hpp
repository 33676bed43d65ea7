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

#include <array>

#include "holo/kernels.hpp"

namespace holo::kernels::detail {

/// 1/n for the series recursion t_n = t_{n-1} * a * (1/n); shared so all
/// backends round identically.
inline constexpr std::array<double, kMaxOrder + 1> kInverse = [] {
  std::array<double, kMaxOrder + 1> r{};
  r[0] = 1.0;
  for (std::size_t n = 1; n <= kMaxOrder; ++n) r[n] = 1.0 / static_cast<double>(n);
  return r;
}();

/// Scalar kernel restricted to lanes [first, last).
void accumulate_scalar_lanes(const SegmentBatch& batch, LaneState state, std::size_t first,
                             std::size_t last);

#if defined(HOLO_HAVE_AVX2)
/// Four-lane AVX2/FMA kernel; lanes not covered by a full register go to the scalar kernel.
void accumulate_avx2(const SegmentBatch& batch, LaneState state);
#endif

}  // namespace holo::kernels::detail
