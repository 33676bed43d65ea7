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

// Brute-force time-stepped propagation of pulse-envelope Hamiltonians
// H(t) = multiplier * Omega(t) * G, used to validate the closed-form gates.
// Each segment is sampled at step midpoints; every step exponential is
// evaluated independently by its Taylor series and multiplied onto the
// running product.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "holo/kernels.hpp"
#include "holo/qmath.hpp"
#include "holo/schemes.hpp"

namespace holo {

enum class EnvelopeShape {
  kSquare,       // constant
  kSineSquared,  // sin^2(pi t / T)
  kHalfSine,     // sin(pi t / T)
};

std::string_view shape_name(EnvelopeShape s);

/// Omega(t) on [0, duration], amplitude calibrated so the integral equals
/// target_area. A zero-duration envelope is a no-op with zero area.
class PulseEnvelope {
 public:
  PulseEnvelope(EnvelopeShape shape, double duration, double target_area);

  EnvelopeShape shape() const { return shape_; }
  double duration() const { return duration_; }
  double target_area() const { return target_area_; }
  double amplitude() const { return amplitude_; }

  double operator()(double t) const;
  /// Adaptive quadrature of Omega(t) over the pulse.
  double integrated_area() const;

 private:
  EnvelopeShape shape_;
  double duration_;
  double target_area_;
  double amplitude_ = 0.0;
};

struct ScheduleSegment {
  PulseEnvelope envelope;
  HermitianGenerator generator;
  /// Scalar error multiplier on the whole segment Hamiltonian.
  double multiplier = 1.0;
};

/// Segments run back to back in order.
struct Schedule {
  std::vector<ScheduleSegment> segments;
};

struct Propagation {
  UnitaryMatrix unitary;
  /// Set when the schedule had no segments; the result is the identity.
  bool empty_schedule = false;
};

inline constexpr std::size_t kMinStepsPerSegment = 100;

/// Ordered product of per-step exponentials. steps_per_segment >= 100.
Propagation propagate(const Schedule& schedule, std::size_t steps_per_segment,
                      kernels::Backend backend = kernels::best_backend());

/// Propagates independent schedules side by side in kernel lanes. Results are
/// in input order and identical to calling propagate() on each schedule up to
/// roundoff.
std::vector<Propagation> propagate_batch(std::span<const Schedule> schedules, std::size_t steps_per_segment,
                                         kernels::Backend backend = kernels::best_backend());

/// prod_s exp(-i multiplier_s * area_s * G_s): the exact result when each
/// segment's generator is time constant.
UnitaryMatrix accumulated_area_propagator(const Schedule& schedule);

struct ConvergenceStudy {
  std::size_t steps = 0;
  double error_n = 0.0;   // error at `steps`
  double error_2n = 0.0;  // error at 2 * steps
  /// log2(error_n / error_2n); +inf when both errors sit at roundoff.
  double order = 0.0;
};

/// Errors are measured against accumulated_area_propagator().
ConvergenceStudy convergence_order(const Schedule& schedule, std::size_t steps = 1000);

/// Schedules realizing the scheme Hamiltonians. Two-loop: two segments of area
/// pi with independent arm errors; single-loop: two segments of area pi/2;
/// single-shot: one segment of area pi in units of Omega.
Schedule two_loop_schedule(const TwoLoopPath& path, const RabiError& error, EnvelopeShape shape);
Schedule single_loop_schedule(const SingleLoopPath& path, double epsilon, EnvelopeShape shape);
Schedule single_shot_schedule(const SingleShotPath& path, double epsilon, EnvelopeShape shape);

}  // namespace holo
