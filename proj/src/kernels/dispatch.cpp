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

#include <stdexcept>
#include <string>

#include "kernels_internal.hpp"

namespace holo::kernels {

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return true;
    case Backend::kAvx2:
#if defined(HOLO_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

Backend best_backend() {
  static const Backend best = backend_available(Backend::kAvx2) ? Backend::kAvx2 : Backend::kScalar;
  return best;
}

void validate(const SegmentBatch& batch, const LaneState& state) {
  if (batch.order > kMaxOrder) {
    throw std::invalid_argument("step kernel: series order " + std::to_string(batch.order) +
                                " exceeds " + std::to_string(kMaxOrder));
  }
  const std::size_t powers = (batch.order + 1) * kEntries * batch.lanes;
  if (batch.powers_re.size() < powers || batch.powers_im.size() < powers) {
    throw std::invalid_argument("step kernel: power table too small");
  }
  if (batch.step_areas.size() < batch.steps * batch.lanes) {
    throw std::invalid_argument("step kernel: step-area table too small");
  }
  if (state.re.size() < kEntries * batch.lanes || state.im.size() < kEntries * batch.lanes) {
    throw std::invalid_argument("step kernel: lane state too small");
  }
}

void accumulate(Backend backend, const SegmentBatch& batch, LaneState state) {
  validate(batch, state);
#if defined(HOLO_HAVE_AVX2)
  if (backend == Backend::kAvx2 && backend_available(Backend::kAvx2)) {
    detail::accumulate_avx2(batch, state);
    return;
  }
#else
  (void)backend;
#endif
  // TODO: add a float64x2 NEON variant of the step kernel for aarch64 builds.
  accumulate_scalar(batch, state);
}

}  // namespace holo::kernels
