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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <iostream>
#include <random>

#include "holo/oracle.hpp"

using namespace holo;

namespace {

constexpr EnvelopeShape kShapes[] = {EnvelopeShape::kSquare, EnvelopeShape::kSineSquared, EnvelopeShape::kHalfSine};

}  // namespace

TEST_CASE("envelope calibration") {
  for (EnvelopeShape s : kShapes) {
    const PulseEnvelope e(s, 2.0, kPi);
    CHECK(e.integrated_area() == doctest::Approx(kPi).epsilon(1e-13));
    CHECK(e(-0.1) == 0.0);
    CHECK(e(2.1) == 0.0);
  }
  const PulseEnvelope none(EnvelopeShape::kSquare, 0.0, kPi);
  CHECK(none.amplitude() == 0.0);
  CHECK(none.integrated_area() == 0.0);
  CHECK_THROWS_AS(PulseEnvelope(EnvelopeShape::kSquare, -1.0, 1.0), ContractViolation);
}

TEST_CASE("empty schedules and step limits") {
  const Propagation p = propagate(Schedule{}, 100);
  CHECK(p.empty_schedule);
  CHECK(max_abs_diff(p.unitary.matrix(), Matrix3c::identity()) == 0.0);
  CHECK_THROWS_AS(propagate(Schedule{}, 99), ContractViolation);
}

TEST_CASE("oracle reproduces the scheme gates") {
  const std::uint64_t seed = 41;
  std::cout << "seed " << seed << "\n";
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (EnvelopeShape s : kShapes) {
    // The half-sine envelope converges at second order; the others are exact at the midpoints.
    const std::size_t steps = s == EnvelopeShape::kHalfSine ? 100000 : 10000;
    const TwoLoopPath two{LoopParams(u(rng) * kPi, u(rng), u(rng)), LoopParams(u(rng) * kPi, u(rng), u(rng))};
    const RabiError e(0.04, -0.03);
    CHECK(max_abs_diff(propagate(two_loop_schedule(two, e, s), steps).unitary.matrix(),
                       two_loop_errored_relative(two, e).matrix()) < 1e-8);
    const SingleLoopPath loop(1.1, 0.3, 2.0, 0.4);
    CHECK(max_abs_diff(propagate(single_loop_schedule(loop, 0.05, s), steps).unitary.matrix(),
                       single_loop_errored(loop, RabiError(0.05)).matrix()) < 1e-8);
    const SingleShotPath shot(0.7, 0.2, 1.4, 0.5);
    CHECK(max_abs_diff(propagate(single_shot_schedule(shot, -0.05, s), steps).unitary.matrix(),
                       single_shot_errored(shot, RabiError(-0.05)).matrix()) < 1e-8);
  }
}

TEST_CASE("batched propagation matches single propagation") {
  std::vector<Schedule> schedules;
  for (int i = 0; i < 21; ++i) {
    const SingleLoopPath loop(0.1 * i, 0.2 * i, 0.3, 0.05 * i);
    schedules.push_back(single_loop_schedule(loop, 0.01 * (i % 5), EnvelopeShape::kHalfSine));
  }
  schedules.push_back(Schedule{});
  schedules.push_back(two_loop_schedule(TwoLoopPath{}, RabiError(0.02), EnvelopeShape::kSquare));
  const auto batch = propagate_batch(schedules, 500);
  REQUIRE(batch.size() == schedules.size());
  for (std::size_t i = 0; i < schedules.size(); ++i) {
    CHECK(max_abs_diff(batch[i].unitary.matrix(), propagate(schedules[i], 500).unitary.matrix()) < 1e-14);
  }
}

TEST_CASE("convergence order") {
  const SingleLoopPath loop(1.0, 0.5, 0.3, 2.2);
  const ConvergenceStudy exact = convergence_order(single_loop_schedule(loop, 0.0, EnvelopeShape::kSquare), 1000);
  CHECK(std::isinf(exact.order));
  const ConvergenceStudy smooth =
      convergence_order(single_loop_schedule(loop, 0.0, EnvelopeShape::kHalfSine), 1000);
  CHECK(smooth.order == doctest::Approx(2.0).epsilon(0.1));
  CHECK(smooth.error_n > smooth.error_2n);
}

TEST_CASE("scalar and vector backends give the same schedule result") {
  if (!kernels::backend_available(kernels::Backend::kAvx2)) {
    MESSAGE("AVX2 backend unavailable; skipped");
    return;
  }
  const Schedule s = single_shot_schedule(SingleShotPath(0.5, 0.1, 0.9, 0.2), 0.03, EnvelopeShape::kSineSquared);
  CHECK(max_abs_diff(propagate(s, 2000, kernels::Backend::kScalar).unitary.matrix(),
                     propagate(s, 2000, kernels::Backend::kAvx2).unitary.matrix()) < 1e-13);
}
