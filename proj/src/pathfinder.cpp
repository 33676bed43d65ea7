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

#include "holo/pathfinder.hpp"

#include <algorithm>
#include <cmath>

namespace holo {

namespace {

// Below this the great circle orthogonal to m has no unique z-maximal point.
constexpr double kPolarAxis = 1e-12;

// Orthonormal (u, v) spanning the plane orthogonal to m with u x v = m.
// u is the point of the great circle with the largest z component; for
// m = +-z it is fixed to +x.
std::pair<Vec3, Vec3> circle_basis(const Vec3& m) {
  const Vec3 z{0.0, 0.0, 1.0};
  const Vec3 p = z - m.z * m;
  const Vec3 u = p.norm() > kPolarAxis ? p.normalized() : Vec3{1.0, 0.0, 0.0};
  return {u, cross(m, u)};
}

Vec3 on_circle(const std::pair<Vec3, Vec3>& basis, double t) {
  return std::cos(t) * basis.first + std::sin(t) * basis.second;
}

}  // namespace

SphericalAngles spherical_angles(const Vec3& n) {
  SphericalAngles a;
  a.theta = std::atan2(std::hypot(n.x, n.y), n.z);
  a.psi = (n.x == 0.0 && n.y == 0.0) ? 0.0 : wrap_angle(std::atan2(n.y, n.x));
  return a;
}

TwoLoopSolution solve_two_loop(const TargetGate& target, const PathConstraints& constraints) {
  if (constraints.orientation_sign != 1 && constraints.orientation_sign != -1) {
    throw DomainError("solve_two_loop: orientation_sign must be +1 or -1");
  }
  const double vartheta = target.theta_gate();
  const auto basis = circle_basis(target.axis());

  // n(t) = cos t u + sin t v gives n(t2) x n(t1) = sin(t1 - t2) m, so t2 = t1 - vartheta.
  // The z component along the circle is A cos t; the balanced condition
  // cos(t1) + cos(t1 - vartheta) = 0 puts t1 = vartheta/2 +- pi/2.
  double t1 = 0.0;
  if (constraints.force_balanced) {
    t1 = 0.5 * vartheta + constraints.orientation_sign * 0.5 * kPi;
  }
  const double t2 = t1 - vartheta;

  const Vec3 n1 = on_circle(basis, t1);
  const Vec3 n2 = on_circle(basis, t2);
  const SphericalAngles a1 = spherical_angles(n1);
  const SphericalAngles a2 = spherical_angles(n2);

  double phi2 = 0.0;
  if (constraints.force_phi_b) {
    const BrightDark bd1 = bright_dark(a1.theta, a1.psi);
    const BrightDark bd2 = bright_dark(a2.theta, a2.psi);
    phi2 = *constraints.force_phi_b - std::arg(inner(bd1.bright, bd2.bright));
  }

  TwoLoopSolution out;
  out.path = TwoLoopPath{LoopParams(a1.theta, a1.psi, 0.0), LoopParams(a2.theta, a2.psi, phi2)};
  out.degenerate = vartheta == 0.0;
  return out;
}

double single_loop_phase_difference(double theta_gate) { return kPi - 2.0 * theta_gate; }
double gate_angle_from_phase_difference(double phase_diff) { return 0.5 * (kPi - phase_diff); }

double single_shot_gamma(double theta_gate) {
  return std::asin(std::clamp(1.0 - 2.0 * theta_gate / kPi, -1.0, 1.0));
}
double gate_angle_from_gamma(double gamma) { return 0.5 * kPi * (1.0 - std::sin(gamma)); }

SingleLoopPath solve_single_loop(const TargetGate& target) {
  const SphericalAngles a = spherical_angles(target.axis());
  return SingleLoopPath(a.theta, a.psi, single_loop_phase_difference(target.theta_gate()), 0.0);
}

SingleShotPath solve_single_shot(const TargetGate& target) {
  const SphericalAngles a = spherical_angles(target.axis());
  return SingleShotPath(0.5 * a.theta, 0.0, a.psi, single_shot_gamma(target.theta_gate()));
}

MeasuredGate measure_gate(const UnitaryMatrix& u) {
  const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  Complex phase = std::polar(1.0, -0.5 * std::arg(det));
  Complex m00 = phase * u(0, 0), m01 = phase * u(0, 1);
  Complex m10 = phase * u(1, 0), m11 = phase * u(1, 1);
  double c = 0.5 * (m00 + m11).real();
  if (c < 0.0) {
    m00 = -m00;
    m01 = -m01;
    m10 = -m10;
    m11 = -m11;
    c = -c;
  }
  const Vec3 s{0.5 * (m01 + m10).imag(), 0.5 * (m01 - m10).real(), 0.5 * (m00 - m11).imag()};
  MeasuredGate g;
  g.theta_gate = std::atan2(s.norm(), c);
  if (s.norm() > 0.0) g.axis = s.normalized();
  return g;
}

}  // namespace holo
