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

#include "holo/oracle.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <sstream>

namespace holo {

namespace {

// Lanes per kernel call; bounds the step-area table to lanes * steps doubles.
constexpr std::size_t kChunkLanes = 16;
// Per-segment budget for the Taylor remainder, summed over all steps.
constexpr double kSeriesBudget = 1e-18;
// Errors below this are treated as roundoff by convergence_order.
constexpr double kRoundoffFloor = 1e-13;

double unit_shape(EnvelopeShape shape, double s) {
  switch (shape) {
    case EnvelopeShape::kSquare:
      return 1.0;
    case EnvelopeShape::kSineSquared: {
      const double v = std::sin(kPi * s);
      return v * v;
    }
    case EnvelopeShape::kHalfSine:
      return std::sin(kPi * s);
  }
  return 0.0;
}

double frobenius(const Matrix3c& m) {
  double s = 0.0;
  for (std::size_t r = 0; r < kDim; ++r)
    for (std::size_t c = 0; c < kDim; ++c) s += std::norm(m(r, c));
  return std::sqrt(s);
}

// Smallest order whose Taylor remainder x^{K+1}/(K+1)!, summed over `steps`, fits the budget.
std::size_t series_order(double max_step_norm, std::size_t steps) {
  double term = max_step_norm;  // x^{K+1}/(K+1)! at K = 0
  for (std::size_t k = 1; k <= kernels::kMaxOrder; ++k) {
    term *= max_step_norm / static_cast<double>(k + 1);
    if (term * static_cast<double>(steps) <= kSeriesBudget) return k;
  }
  std::ostringstream os;
  os << "propagate: step norm " << max_step_norm << " too large for the series kernel; increase steps";
  throw ContractViolation(os.str());
}

void require_steps(std::size_t steps) {
  if (steps < kMinStepsPerSegment) {
    std::ostringstream os;
    os << "propagate: steps_per_segment must be >= " << kMinStepsPerSegment << " (got " << steps << ")";
    throw ContractViolation(os.str());
  }
}

// Propagates schedules[first, last) in one lane group.
void propagate_chunk(std::span<const Schedule> schedules, std::size_t steps, kernels::Backend backend,
                     std::vector<Propagation>& out) {
  const std::size_t lanes = schedules.size();
  std::size_t max_segments = 0;
  for (const auto& s : schedules) max_segments = std::max(max_segments, s.segments.size());

  std::vector<double> u_re(kernels::kEntries * lanes, 0.0);
  std::vector<double> u_im(kernels::kEntries * lanes, 0.0);
  for (std::size_t l = 0; l < lanes; ++l)
    for (std::size_t d = 0; d < kDim; ++d) u_re[(d * kDim + d) * lanes + l] = 1.0;

  std::vector<double> areas(steps * lanes);
  std::vector<double> p_re;
  std::vector<double> p_im;

  for (std::size_t seg = 0; seg < max_segments; ++seg) {
    // Step areas and the series order shared by the group.
    double max_step_norm = 0.0;
    for (std::size_t l = 0; l < lanes; ++l) {
      const auto& segments = schedules[l].segments;
      if (seg >= segments.size()) {
        for (std::size_t k = 0; k < steps; ++k) areas[k * lanes + l] = 0.0;
        continue;
      }
      const ScheduleSegment& s = segments[seg];
      const double dt = s.envelope.duration() / static_cast<double>(steps);
      double peak = 0.0;
      for (std::size_t k = 0; k < steps; ++k) {
        const double a = s.multiplier * s.envelope((static_cast<double>(k) + 0.5) * dt) * dt;
        areas[k * lanes + l] = a;
        peak = std::max(peak, std::abs(a));
      }
      max_step_norm = std::max(max_step_norm, peak * frobenius(s.generator.matrix()));
    }
    const std::size_t order = max_step_norm == 0.0 ? 0 : series_order(max_step_norm, steps);

    // P_n = (-i G)^n per lane; lanes past their last segment get G = 0.
    p_re.assign((order + 1) * kernels::kEntries * lanes, 0.0);
    p_im.assign((order + 1) * kernels::kEntries * lanes, 0.0);
    for (std::size_t l = 0; l < lanes; ++l) {
      const auto& segments = schedules[l].segments;
      const Matrix3c g = seg < segments.size() ? segments[seg].generator.matrix() : Matrix3c::zero();
      const Matrix3c step_gen = Complex{0.0, -1.0} * g;
      Matrix3c power = Matrix3c::identity();
      for (std::size_t n = 0; n <= order; ++n) {
        for (std::size_t r = 0; r < kDim; ++r)
          for (std::size_t c = 0; c < kDim; ++c) {
            const std::size_t idx = (n * kernels::kEntries + r * kDim + c) * lanes + l;
            p_re[idx] = power(r, c).real();
            p_im[idx] = power(r, c).imag();
          }
        power = step_gen * power;
      }
    }

    kernels::SegmentBatch batch;
    batch.lanes = lanes;
    batch.steps = steps;
    batch.order = order;
    batch.powers_re = p_re;
    batch.powers_im = p_im;
    batch.step_areas = areas;
    kernels::accumulate(backend, batch, kernels::LaneState{u_re, u_im});
  }

  for (std::size_t l = 0; l < lanes; ++l) {
    Matrix3c m;
    for (std::size_t r = 0; r < kDim; ++r)
      for (std::size_t c = 0; c < kDim; ++c) {
        const std::size_t idx = (r * kDim + c) * lanes + l;
        m(r, c) = Complex{u_re[idx], u_im[idx]};
      }
    Propagation p;
    p.unitary = UnitaryMatrix::from(m);
    p.empty_schedule = schedules[l].segments.empty();
    out.push_back(p);
  }
}

}  // namespace

std::string_view shape_name(EnvelopeShape s) {
  switch (s) {
    case EnvelopeShape::kSquare:
      return "square";
    case EnvelopeShape::kSineSquared:
      return "sine-squared";
    case EnvelopeShape::kHalfSine:
      return "half-sine";
  }
  return "unknown";
}

PulseEnvelope::PulseEnvelope(EnvelopeShape shape, double duration, double target_area)
    : shape_(shape), duration_(duration), target_area_(target_area) {
  if (!(duration >= 0.0) || !std::isfinite(duration)) {
    throw ContractViolation("PulseEnvelope: duration must be finite and non-negative");
  }
  if (!std::isfinite(target_area)) throw ContractViolation("PulseEnvelope: target area must be finite");
  if (duration == 0.0) return;
  const double unit_area = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      [shape](double s) { return unit_shape(shape, s); }, 0.0, 1.0, 15, 1e-14);
  amplitude_ = target_area / (duration * unit_area);
}

double PulseEnvelope::operator()(double t) const {
  if (duration_ == 0.0 || t < 0.0 || t > duration_) return 0.0;
  return amplitude_ * unit_shape(shape_, t / duration_);
}

double PulseEnvelope::integrated_area() const {
  if (duration_ == 0.0) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      [this](double t) { return (*this)(t); }, 0.0, duration_, 15, 1e-14);
}

Propagation propagate(const Schedule& schedule, std::size_t steps_per_segment, kernels::Backend backend) {
  return propagate_batch(std::span<const Schedule>(&schedule, 1), steps_per_segment, backend).front();
}

std::vector<Propagation> propagate_batch(std::span<const Schedule> schedules, std::size_t steps_per_segment,
                                         kernels::Backend backend) {
  require_steps(steps_per_segment);
  std::vector<Propagation> out;
  out.reserve(schedules.size());
  for (std::size_t first = 0; first < schedules.size(); first += kChunkLanes) {
    const std::size_t count = std::min(kChunkLanes, schedules.size() - first);
    propagate_chunk(schedules.subspan(first, count), steps_per_segment, backend, out);
  }
  return out;
}

UnitaryMatrix accumulated_area_propagator(const Schedule& schedule) {
  UnitaryMatrix u;
  for (const auto& s : schedule.segments) {
    u = expm(s.generator, s.multiplier * s.envelope.integrated_area()) * u;
  }
  return u;
}

ConvergenceStudy convergence_order(const Schedule& schedule, std::size_t steps) {
  const UnitaryMatrix reference = accumulated_area_propagator(schedule);
  ConvergenceStudy c;
  c.steps = steps;
  c.error_n = max_abs_diff(propagate(schedule, steps).unitary.matrix(), reference.matrix());
  c.error_2n = max_abs_diff(propagate(schedule, 2 * steps).unitary.matrix(), reference.matrix());
  if (c.error_n <= kRoundoffFloor && c.error_2n <= kRoundoffFloor) {
    c.order = std::numeric_limits<double>::infinity();
  } else {
    c.order = std::log2(c.error_n / c.error_2n);
  }
  return c;
}

Schedule two_loop_schedule(const TwoLoopPath& path, const RabiError& error, EnvelopeShape shape) {
  Schedule s;
  for (const LoopParams* loop : {&path.loop1, &path.loop2}) {
    s.segments.push_back({PulseEnvelope(shape, 1.0, kPi), relative_error_generator(*loop, error), 1.0});
  }
  return s;
}

Schedule single_loop_schedule(const SingleLoopPath& path, double epsilon, EnvelopeShape shape) {
  const RabiError error(epsilon);
  const BrightDark bd = bright_dark(path.theta(), path.psi());
  Schedule s;
  for (double phi : {path.phi(), path.phi_prime()}) {
    s.segments.push_back(
        {PulseEnvelope(shape, 1.0, 0.5 * kPi), lambda_generator(bd.bright, phi), 1.0 + error.epsilon()});
  }
  return s;
}

Schedule single_shot_schedule(const SingleShotPath& path, double epsilon, EnvelopeShape shape) {
  const RabiError error(epsilon);
  Schedule s;
  s.segments.push_back({PulseEnvelope(shape, 1.0, kPi), single_shot_generator(path, error.epsilon()), 1.0});
  return s;
}

}  // namespace holo
