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

// Batched step-product kernels behind the time-stepped propagator.
//
// A batch holds `lanes` independent 3x3 propagations laid out structure of
// arrays: entry e (row-major, 0..8) of lane l lives at [e * lanes + l].
// Within one segment the generator G of each lane is time constant, so step k
// applies
//
//   S_k = sum_{n=0}^{order} a_k^n / n! * P_n,   P_n = (-i)^n G^n,
//
// i.e. the truncated Taylor series of exp(-i a_k G) with a_k the step area,
// and accumulates U <- S_k U. The scalar kernel is the reference; the AVX2
// kernel processes four lanes per register and must agree with it to
// roundoff.

#include <cstddef>
#include <span>
#include <string_view>

namespace holo::kernels {

inline constexpr std::size_t kEntries = 9;
/// Upper bound on the series order accepted by the kernels.
inline constexpr std::size_t kMaxOrder = 24;

struct SegmentBatch {
  std::size_t lanes = 0;
  std::size_t steps = 0;
  std::size_t order = 0;
  /// P_n entries, [(n * kEntries + e) * lanes + l], n = 0..order.
  std::span<const double> powers_re;
  std::span<const double> powers_im;
  /// Step areas, [k * lanes + l].
  std::span<const double> step_areas;
};

/// Running products, [e * lanes + l].
struct LaneState {
  std::span<double> re;
  std::span<double> im;
};

enum class Backend { kScalar, kAvx2 };

std::string_view backend_name(Backend b);
/// True if the variant was compiled in and the CPU supports it.
bool backend_available(Backend b);
/// Widest available backend.
Backend best_backend();

/// Throws std::invalid_argument on inconsistent sizes.
void validate(const SegmentBatch& batch, const LaneState& state);

/// Reference implementation; no validation.
void accumulate_scalar(const SegmentBatch& batch, LaneState state);

/// Validates, then runs the selected backend. Falls back to scalar if the
/// backend is unavailable.
void accumulate(Backend backend, const SegmentBatch& batch, LaneState state);

}  // namespace holo::kernels
