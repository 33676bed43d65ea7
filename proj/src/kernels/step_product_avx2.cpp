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

// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace holo::kernels::detail {

namespace {

constexpr std::size_t kWidth = 4;

void accumulate_block(const SegmentBatch& batch, LaneState state, std::size_t l) {
  const std::size_t lanes = batch.lanes;
  const double* pr = batch.powers_re.data();
  const double* pi = batch.powers_im.data();
  double* ur = state.re.data();
  double* ui = state.im.data();

  __m256d u_re[kEntries];
  __m256d u_im[kEntries];
  for (std::size_t e = 0; e < kEntries; ++e) {
    u_re[e] = _mm256_loadu_pd(ur + e * lanes + l);
    u_im[e] = _mm256_loadu_pd(ui + e * lanes + l);
  }

  for (std::size_t k = 0; k < batch.steps; ++k) {
    const __m256d a = _mm256_loadu_pd(batch.step_areas.data() + k * lanes + l);

    __m256d s_re[kEntries];
    __m256d s_im[kEntries];
    for (std::size_t e = 0; e < kEntries; ++e) {
      s_re[e] = _mm256_loadu_pd(pr + e * lanes + l);
      s_im[e] = _mm256_loadu_pd(pi + e * lanes + l);
    }
    __m256d t = _mm256_set1_pd(1.0);
    for (std::size_t n = 1; n <= batch.order; ++n) {
      t = _mm256_mul_pd(_mm256_mul_pd(t, a), _mm256_set1_pd(kInverse[n]));
      const std::size_t base = n * kEntries;
      for (std::size_t e = 0; e < kEntries; ++e) {
        s_re[e] = _mm256_fmadd_pd(t, _mm256_loadu_pd(pr + (base + e) * lanes + l), s_re[e]);
        s_im[e] = _mm256_fmadd_pd(t, _mm256_loadu_pd(pi + (base + e) * lanes + l), s_im[e]);
      }
    }

    __m256d n_re[kEntries];
    __m256d n_im[kEntries];
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        __m256d accr = _mm256_setzero_pd();
        __m256d acci = _mm256_setzero_pd();
        for (std::size_t m = 0; m < 3; ++m) {
          const __m256d ar = s_re[i * 3 + m];
          const __m256d ai = s_im[i * 3 + m];
          const __m256d br = u_re[m * 3 + j];
          const __m256d bi = u_im[m * 3 + j];
          accr = _mm256_fmadd_pd(ar, br, accr);
          accr = _mm256_fnmadd_pd(ai, bi, accr);
          acci = _mm256_fmadd_pd(ar, bi, acci);
          acci = _mm256_fmadd_pd(ai, br, acci);
        }
        n_re[i * 3 + j] = accr;
        n_im[i * 3 + j] = acci;
      }
    }
    for (std::size_t e = 0; e < kEntries; ++e) {
      u_re[e] = n_re[e];
      u_im[e] = n_im[e];
    }
  }

  for (std::size_t e = 0; e < kEntries; ++e) {
    _mm256_storeu_pd(ur + e * lanes + l, u_re[e]);
    _mm256_storeu_pd(ui + e * lanes + l, u_im[e]);
  }
}

}  // namespace

void accumulate_avx2(const SegmentBatch& batch, LaneState state) {
  const std::size_t full = batch.lanes - batch.lanes % kWidth;
  for (std::size_t l = 0; l < full; l += kWidth) accumulate_block(batch, state, l);
  accumulate_scalar_lanes(batch, state, full, batch.lanes);
}

}  // namespace holo::kernels::detail
