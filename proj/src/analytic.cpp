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

#include "holo/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace holo {

namespace {

constexpr double kPi2 = kPi * kPi;

void require_gate_angle(double theta_gate, const char* where) {
  if (!(theta_gate >= 0.0 && theta_gate <= 0.5 * kPi)) {
    std::ostringstream os;
    os << where << ": rotation angle " << theta_gate << " outside [0, pi/2]";
    throw DomainError(os.str());
  }
}

void require_small(double epsilon, const char* where) {
  if (!(std::abs(epsilon) <= RabiError::kMaxMagnitude)) {
    std::ostringstream os;
    os << where << ": |epsilon| = " << std::abs(epsilon) << " exceeds " << RabiError::kMaxMagnitude;
    throw DomainError(os.str());
  }
}

}  // namespace

TargetGate::TargetGate(double theta_gate, const Vec3& axis) : theta_gate_(theta_gate), axis_(axis) {
  require_gate_angle(theta_gate, "TargetGate");
  if (!(std::abs(axis.norm() - 1.0) <= 1e-12)) {
    throw DomainError("TargetGate: rotation axis must be a unit vector");
  }
}

UnitaryMatrix TargetGate::embedded() const {
  Matrix3c m = Complex{std::cos(theta_gate_), 0.0} * qubit_identity();
  m += Complex{0.0, std::sin(theta_gate_)} * pauli_dot(axis_);
  m += excited_projector();
  return UnitaryMatrix::from(m);
}

double f1(double theta_gate) {
  require_gate_angle(theta_gate, "f1");
  return 2.0 - 2.0 * std::cos(0.5 * theta_gate);
}

double f2(double theta_gate) {
  require_gate_angle(theta_gate, "f2");
  return 0.5 * (1.0 - std::cos(2.0 * theta_gate));
}

double f3(double theta_gate) {
  require_gate_angle(theta_gate, "f3");
  const double t = theta_gate * (1.0 - theta_gate / kPi);
  return 16.0 * t * t / kPi2;
}

double fid2_two_loop(double eta, double phi_b, double epsilon) {
  require_small(epsilon, "fid2_two_loop");
  return 1.0 - (2.0 / 3.0) * (1.0 + std::cos(0.5 * eta) * std::cos(phi_b)) * kPi2 * epsilon * epsilon;
}

double fid2_single_loop(double phase_diff, double epsilon) {
  require_small(epsilon, "fid2_single_loop");
  return 1.0 - (1.0 / 6.0) * (1.0 + std::cos(phase_diff)) * kPi2 * epsilon * epsilon;
}

double fid2_single_shot(double gamma, double epsilon) {
  require_small(epsilon, "fid2_single_shot");
  const double c2 = std::cos(gamma) * std::cos(gamma);
  return 1.0 - (1.0 / 3.0) * kPi2 * epsilon * epsilon * c2 * c2;
}

RelativeErrorFidelity fid2_relative(const TwoLoopPath& path, const RabiError& error) {
  const LoopParams& l1 = path.loop1;
  const LoopParams& l2 = path.loop2;

  RelativeErrorBreakdown b;
  const double theta1p = errored_theta(l1.theta(), error);
  const double theta2p = errored_theta(l2.theta(), error);
  b.theta11 = l1.theta() - theta1p;
  b.theta22 = l2.theta() - theta2p;
  b.psi21 = l2.psi() - l1.psi();
  b.delta1 = errored_delta(l1.theta(), error);
  b.delta2 = errored_delta(l2.theta(), error);

  // eta' and phi_b come from the errored bright states.
  const TwoLoopPath errored{LoopParams(theta1p, l1.psi(), l1.phi()), LoopParams(theta2p, l2.psi(), l2.phi())};
  const BrightDecomposition dec = phi_b_of(errored);
  b.eta_prime = dec.eta;
  b.phi_b = dec.phi_b;

  const double y2 = b.theta11 * b.theta11 + b.theta22 * b.theta22 -
                    2.0 * b.theta11 * b.theta22 * std::cos(b.psi21);
  const double interference = dec.phi_b ? std::cos(0.5 * dec.eta) * std::cos(*dec.phi_b) : 0.0;
  const double z2 = b.delta1 * b.delta1 + b.delta2 * b.delta2 + 2.0 * b.delta1 * b.delta2 * interference;
  b.y = std::sqrt(std::max(0.0, y2));
  b.z = std::sqrt(std::max(0.0, z2));

  RelativeErrorFidelity out;
  out.breakdown = b;
  out.fidelity = 1.0 - b.y * b.y / 3.0 - kPi2 * b.z * b.z / 3.0;
  return out;
}

double dF_dkappa_at_zero(const TwoLoopPath& path, double epsilon) {
  require_small(epsilon, "dF_dkappa_at_zero");
  const double eta = phi_b_of(path).eta;
  return -(2.0 / 3.0) * (1.0 - std::cos(0.5 * eta)) *
         (std::cos(path.loop1.theta()) + std::cos(path.loop2.theta())) * kPi2 * epsilon;
}

QuadraticFit extract_quadratic_coefficient(std::span<const FidelitySample> samples) {
  if (samples.size() < 3) {
    throw ContractViolation("extract_quadratic_coefficient: need at least 3 samples");
  }
  for (const auto& s : samples) {
    if (!std::isfinite(s.epsilon) || s.epsilon == 0.0)
      throw ContractViolation("extract_quadratic_coefficient: epsilon must be finite and nonzero");
    if (!(s.fidelity > 0.0 && s.fidelity <= 1.0))
      throw ContractViolation("extract_quadratic_coefficient: fidelity outside (0, 1]");
  }
  const bool all_equal = std::all_of(samples.begin(), samples.end(),
                                     [&](const FidelitySample& s) { return s.epsilon == samples[0].epsilon; });
  if (all_equal) {
    throw ContractViolation("extract_quadratic_coefficient: ill-conditioned sample set (all epsilon equal)");
  }

  // Average (1 - F)/eps^2 over samples sharing |eps|; +-eps pairs cancel odd orders.
  struct Group {
    double eps2 = 0.0;
    double sum = 0.0;
    int count = 0;
  };
  std::vector<Group> groups;
  for (const auto& s : samples) {
    const double e2 = s.epsilon * s.epsilon;
    const double q = (1.0 - s.fidelity) / e2;
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const Group& g) { return std::abs(g.eps2 - e2) <= 1e-12 * e2; });
    if (it == groups.end()) {
      groups.push_back({e2, q, 1});
    } else {
      it->sum += q;
      ++it->count;
    }
  }

  double c = 0.0;
  double d = 0.0;
  if (groups.size() == 1) {
    c = groups[0].sum / groups[0].count;
  } else {
    // Least squares of q = c + d eps^2 over the group means.
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double n = static_cast<double>(groups.size());
    for (const auto& g : groups) {
      const double q = g.sum / g.count;
      sx += g.eps2;
      sy += q;
      sxx += g.eps2 * g.eps2;
      sxy += g.eps2 * q;
    }
    const double det = n * sxx - sx * sx;
    d = (n * sxy - sx * sy) / det;
    c = (sy - d * sx) / n;
  }

  double ss = 0.0;
  for (const auto& s : samples) {
    const double e2 = s.epsilon * s.epsilon;
    const double r = (1.0 - s.fidelity) / e2 - (c + d * e2);
    ss += r * r;
  }
  return {c, std::sqrt(ss / static_cast<double>(samples.size()))};
}

std::vector<double> default_extraction_epsilons() { return {1e-3, -1e-3, 1e-4, -1e-4}; }

QuadraticFit quadratic_coefficient_of(const std::function<double(double)>& fidelity,
                                      std::span<const double> epsilons) {
  std::vector<FidelitySample> samples;
  samples.reserve(epsilons.size());
  for (double e : epsilons) samples.push_back({e, fidelity(e)});
  return extract_quadratic_coefficient(samples);
}

double exact_fidelity_two_loop(const TwoLoopPath& path, const RabiError& error) {
  const UnitaryMatrix ideal = two_loop_ideal(path);
  const UnitaryMatrix errored =
      error.kappa() == 0.0 ? two_loop_errored(path, error) : two_loop_errored_relative(path, error);
  return gate_fidelity(ideal, errored);
}

double exact_fidelity_single_loop(const SingleLoopPath& path, double epsilon) {
  return gate_fidelity(single_loop_ideal(path), single_loop_errored(path, RabiError(epsilon)));
}

double exact_fidelity_single_shot(const SingleShotPath& path, double epsilon) {
  return gate_fidelity(single_shot_ideal(path), single_shot_errored(path, RabiError(epsilon)));
}

namespace {

double two_loop_coefficient(const TwoLoopPath& path) {
  const BrightDecomposition dec = phi_b_of(path);
  const double interference = dec.phi_b ? std::cos(0.5 * dec.eta) * std::cos(*dec.phi_b) : 0.0;
  return (2.0 / 3.0) * (1.0 + interference) * kPi2;
}

}  // namespace

FidelityReport report_two_loop(const TwoLoopPath& path, double epsilon) {
  return report_two_loop_relative(path, RabiError(epsilon));
}

FidelityReport report_two_loop_relative(const TwoLoopPath& path, const RabiError& error) {
  const auto eps = default_extraction_epsilons();
  FidelityReport r;
  r.exact = exact_fidelity_two_loop(path, error);
  r.analytic2 = fid2_relative(path, error).fidelity;
  r.quad_coeff_exact =
      quadratic_coefficient_of([&](double e) { return exact_fidelity_two_loop(path, RabiError(e)); }, eps)
          .coefficient;
  r.quad_coeff_analytic = two_loop_coefficient(path);
  return r;
}

FidelityReport report_single_loop(const SingleLoopPath& path, double epsilon) {
  const auto eps = default_extraction_epsilons();
  const double diff = path.phi() - path.phi_prime();
  FidelityReport r;
  r.exact = exact_fidelity_single_loop(path, epsilon);
  r.analytic2 = fid2_single_loop(diff, epsilon);
  r.quad_coeff_exact =
      quadratic_coefficient_of([&](double e) { return exact_fidelity_single_loop(path, e); }, eps).coefficient;
  r.quad_coeff_analytic = (1.0 / 6.0) * (1.0 + std::cos(diff)) * kPi2;
  return r;
}

FidelityReport report_single_shot(const SingleShotPath& path, double epsilon) {
  const auto eps = default_extraction_epsilons();
  const double c2 = std::cos(path.gamma()) * std::cos(path.gamma());
  FidelityReport r;
  r.exact = exact_fidelity_single_shot(path, epsilon);
  r.analytic2 = fid2_single_shot(path.gamma(), epsilon);
  r.quad_coeff_exact =
      quadratic_coefficient_of([&](double e) { return exact_fidelity_single_shot(path, e); }, eps).coefficient;
  r.quad_coeff_analytic = (1.0 / 3.0) * kPi2 * c2 * c2;
  return r;
}

}  // namespace holo
