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

// Solves scheme parameters that realize a target gate R(theta_gate, m).
//
// Angle conventions, shared by every scheme:
//   two-loop     theta_gate = angle(n1, n2), n2 x n1 = sin(theta_gate) m
//   single-loop  phi - phi' = pi - 2 theta_gate, bright-state Bloch vector = m
//   single-shot  sin(gamma) = 1 - 2 theta_gate / pi, bright-state Bloch vector = m

#include <optional>

#include "holo/analytic.hpp"
#include "holo/qmath.hpp"
#include "holo/schemes.hpp"

namespace holo {

struct PathConstraints {
  /// Decomposition phase to impose; left free (phi1 = phi2 = 0) when empty.
  std::optional<double> force_phi_b = kPi;
  /// Impose cos(theta1) + cos(theta2) = 0.
  bool force_balanced = true;
  /// Selects one of the two balanced solutions; must be +1 or -1.
  int orientation_sign = +1;
};

struct TwoLoopSolution {
  TwoLoopPath path;
  /// theta_gate = 0: the axis carries no information and loop2 = loop1.
  bool degenerate = false;
};

TwoLoopSolution solve_two_loop(const TargetGate& target, const PathConstraints& constraints = {});
SingleLoopPath solve_single_loop(const TargetGate& target);
SingleShotPath solve_single_shot(const TargetGate& target);

/// Phase difference phi - phi' that realizes rotation angle theta_gate.
double single_loop_phase_difference(double theta_gate);
/// gamma with sin(gamma) = 1 - 2 theta_gate / pi.
double single_shot_gamma(double theta_gate);
/// Inverse maps.
double gate_angle_from_phase_difference(double phase_diff);
double gate_angle_from_gamma(double gamma);

/// (theta, psi) of a unit Bloch vector, theta in [0, pi], psi in [0, 2 pi).
struct SphericalAngles {
  double theta = 0.0;
  double psi = 0.0;
};
SphericalAngles spherical_angles(const Vec3& n);

/// Reads (theta_gate, axis) off the qubit block of a gate, quotienting the
/// global phase. The axis is arbitrary (+z) when theta_gate vanishes.
struct MeasuredGate {
  double theta_gate = 0.0;
  Vec3 axis{0.0, 0.0, 1.0};
};
MeasuredGate measure_gate(const UnitaryMatrix& u);

}  // namespace holo
