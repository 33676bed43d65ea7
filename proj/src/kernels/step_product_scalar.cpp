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

#include "kernels_internal.hpp"

namespace holo::kernels {

namespace detail {

void accumulate_scalar_lanes(const SegmentBatch& batch, LaneState state, std::size_t first,
                             std::size_t last) {
  const std::size_t lanes = batch.lanes;
  const double* pr = batch.powers_re.data();
  const double* pi = batch.powers_im.data();
  double* ur = state.re.data();
  double* ui = state.im.data();

  for (std::size_t l = first; l < last; ++l) {
    for (std::size_t k = 0; k < batch.steps; ++k) {
      const double a = batch.step_areas[k * lanes + l];

      double sr[kEntries];
      double si[kEntries];
      for (std::size_t e = 0; e < kEntries; ++e) {
        sr[e] = pr[e * lanes + l];
        si[e] = pi[e * lanes + l];
      }
      double t = 1.0;
      for (std::size_t n = 1; n <= batch.order; ++n) {
        t = (t * a) * kInverse[n];
        const std::size_t base = n * kEntries;
        for (std::size_t e = 0; e < kEntries; ++e) {
          sr[e] += t * pr[(base + e) * lanes + l];
          si[e] += t * pi[(base + e) * lanes + l];
        }
      }

      double nr[kEntries];
      double ni[kEntries];
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
          double accr = 0.0;
          double acci = 0.0;
          for (std::size_t m = 0; m < 3; ++m) {
            const double ar = sr[i * 3 + m];
            const double ai = si[i * 3 + m];
            const double br = ur[(m * 3 + j) * lanes + l];
            const double bi = ui[(m * 3 + j) * lanes + l];
            accr += ar * br - ai * bi;
            acci += ar * bi + ai * br;
          }
          nr[i * 3 + j] = accr;
          ni[i * 3 + j] = acci;
        }
      }
      for (std::size_t e = 0; e < kEntries; ++e) {
        ur[e * lanes + l] = nr[e];
        ui[e * lanes + l] = ni[e];
      }
    }
  }
}

}  // namespace detail

void accumulate_scalar(const SegmentBatch& batch, LaneState state) {
  detail::accumulate_scalar_lanes(batch, state, 0, batch.lanes);
}

}  // namespace holo::kernels
