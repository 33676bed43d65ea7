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

// Second-order fidelity expressions for the three schemes, the relative-error
// fidelity of the two-loop scheme, and quadratic-coefficient extraction from
// exactly propagated fidelities.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "holo/qmath.hpp"
#include "holo/schemes.hpp"

namespace holo {

/// Target qubit gate R(theta_gate, axis) = exp(i theta_gate axis.sigma),
/// theta_gate in [0, pi/2], |axis| = 1.
class TargetGate {
 public:
  TargetGate(double theta_gate, const Vec3& axis);

  double theta_gate() const { return theta_gate_; }
  const Vec3& axis() const { return axis_; }

  /// The 2x2 rotation embedded in the qubit block, with |e><e| added.
  UnitaryMatrix embedded() const;

 private:
  double theta_gate_;
  Vec3 axis_;
};

/// Error functions of the two-loop (f1), single-loop (f2) and single-shot (f3)
/// schemes: F_R = 1 - (pi^2 eps^2 / 3) f_i(theta_gate). Domain [0, pi/2].
double f1(double theta_gate);
double f2(double theta_gate);
double f3(double theta_gate);

/// Bundles the three comparison functions so callers can substitute them.
struct ComparisonFunctions {
  std::function<double(double)> f1 = holo::f1;
  std::function<double(double)> f2 = holo::f2;
  std::function<double(double)> f3 = holo::f3;
};

/// 1 - (2/3)(1 + cos(eta/2) cos(phi_b)) pi^2 eps^2.
double fid2_two_loop(double eta, double phi_b, double epsilon);
/// 1 - (1/6)(1 + cos(phi - phi')) pi^2 eps^2.
double fid2_single_loop(double phase_diff, double epsilon);
/// 1 - (1/3) pi^2 eps^2 cos^4(gamma).
double fid2_single_shot(double gamma, double epsilon);

struct RelativeErrorBreakdown {
  double theta11 = 0.0;  // theta1 - theta1'
  double theta22 = 0.0;  // theta2 - theta2'
  double psi21 = 0.0;    // psi2 - psi1
  double delta1 = 0.0;
  double delta2 = 0.0;
  double eta_prime = 0.0;
  /// Decomposition phase of the errored bright states; absent when eta' = pi.
  std::optional<double> phi_b;
  double y = 0.0;
  double z = 0.0;
};

struct RelativeErrorFidelity {
  RelativeErrorBreakdown breakdown;
  double fidelity = 1.0;  // 1 - y^2/3 - pi^2 z^2/3

  bool degenerate() const { return !breakdown.phi_b.has_value(); }
};

RelativeErrorFidelity fid2_relative(const TwoLoopPath& path, const RabiError& error);

/// dF''/dkappa at kappa = 0 on a phi_b = pi path:
/// -(2/3)(1 - cos(eta/2))(cos theta1 + cos theta2) pi^2 eps.
double dF_dkappa_at_zero(const TwoLoopPath& path, double epsilon);

struct FidelitySample {
  double epsilon = 0.0;
  double fidelity = 1.0;
};

struct QuadraticFit {
  double coefficient = 0.0;  // c in F = 1 - c eps^2
  double residual = 0.0;     // RMS misfit of (1 - F)/eps^2
};

/// Fits F(eps) = 1 - c eps^2. Samples at +eps and -eps are averaged first so
/// odd orders cancel; with two or more distinct |eps| the eps^4 term is fitted
/// alongside and c is the eps -> 0 intercept.
QuadraticFit extract_quadratic_coefficient(std::span<const FidelitySample> samples);

/// Symmetric sampling grid used for coefficient extraction: +-1e-3, +-1e-4.
std::vector<double> default_extraction_epsilons();

/// Samples fidelity(eps) on `epsilons` and fits the quadratic coefficient.
QuadraticFit quadratic_coefficient_of(const std::function<double(double)>& fidelity,
                                      std::span<const double> epsilons);

struct FidelityReport {
  double exact = 1.0;
  double analytic2 = 1.0;
  double quad_coeff_exact = 0.0;
  double quad_coeff_analytic = 0.0;
};

/// Exact vs second-order fidelity at `epsilon` for each common-error scheme.
FidelityReport report_two_loop(const TwoLoopPath& path, double epsilon);
FidelityReport report_single_loop(const SingleLoopPath& path, double epsilon);
FidelityReport report_single_shot(const SingleShotPath& path, double epsilon);
/// Relative-error report; the quadratic coefficients are taken along kappa = 0.
FidelityReport report_two_loop_relative(const TwoLoopPath& path, const RabiError& error);

/// Exact fidelities of the errored propagators against their ideal gates.
double exact_fidelity_two_loop(const TwoLoopPath& path, const RabiError& error);
double exact_fidelity_single_loop(const SingleLoopPath& path, double epsilon);
double exact_fidelity_single_shot(const SingleShotPath& path, double epsilon);

}  // namespace holo
