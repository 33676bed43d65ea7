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

// Ideal and Rabi-error-affected gates of the three holonomic schemes in the
// Lambda system: two-loop, single-loop multiple-pulse and single-shot.
//
// Pulse areas are imposed exactly (pi per two-loop loop, pi/2 per single-loop
// segment, Omega*T = pi for single-shot). A systematic Rabi error rescales the
// whole envelope, so the accumulated area fully determines each propagator.
// Time-resolved propagation lives in oracle.hpp.

#include <optional>
#include <utility>

#include "holo/qmath.hpp"

namespace holo {

/// Laser parameters of one pulse pair: ratio angle theta = 2 atan(Omega1/Omega0),
/// relative phase psi and total phase phi.
class LoopParams {
 public:
  LoopParams() = default;
  /// theta must lie in [0, pi]; psi and phi are reduced to [0, 2 pi).
  LoopParams(double theta, double psi, double phi);

  double theta() const { return theta_; }
  double psi() const { return psi_; }
  double phi() const { return phi_; }

 private:
  double theta_ = 0.0;
  double psi_ = 0.0;
  double phi_ = 0.0;
};

struct TwoLoopPath {
  LoopParams loop1;
  LoopParams loop2;
};

/// One bright state driven in two segments of area pi/2 with total phases
/// phi then phi_prime.
class SingleLoopPath {
 public:
  SingleLoopPath() = default;
  SingleLoopPath(double theta, double psi, double phi, double phi_prime);

  double theta() const { return theta_; }
  double psi() const { return psi_; }
  double phi() const { return phi_; }
  double phi_prime() const { return phi_prime_; }

 private:
  double theta_ = 0.0;
  double psi_ = 0.0;
  double phi_ = 0.0;
  double phi_prime_ = 0.0;
};

/// Drive amplitudes and detuning of the single-shot pulse for a chosen scale Omega.
struct SingleShotDrive {
  double detuning = 0.0;  // Delta = -2 Omega sin(gamma)
  double omega0 = 0.0;    // Omega cos(alpha) cos(gamma)
  double omega1 = 0.0;    // Omega sin(alpha) cos(gamma)
  double beta0 = 0.0;
  double beta1 = 0.0;
};

/// Off-resonant single-shot path. The bright state is
/// cos(alpha) e^{i beta0}|0> + sin(alpha) e^{i beta1}|1>.
class SingleShotPath {
 public:
  SingleShotPath() = default;
  /// alpha in [0, pi/2]; gamma in [-pi/2, pi/2]; betas reduced to [0, 2 pi).
  SingleShotPath(double alpha, double beta0, double beta1, double gamma);

  /// Inverts the (Delta, Omega0, Omega1) parameterization; requires a nonzero drive.
  static SingleShotPath from_drive(const SingleShotDrive& drive);

  double alpha() const { return alpha_; }
  double beta0() const { return beta0_; }
  double beta1() const { return beta1_; }
  double gamma() const { return gamma_; }

  SingleShotDrive drive(double omega) const;

 private:
  double alpha_ = 0.0;
  double beta0_ = 0.0;
  double beta1_ = 0.0;
  double gamma_ = 0.0;
};

/// Systematic fractional Rabi-frequency error. epsilon is the mean error and
/// kappa the relative difference: epsilon0 = epsilon + kappa scales the |0>-|e>
/// drive, epsilon1 = epsilon - kappa the |1>-|e> drive.
class RabiError {
 public:
  static constexpr double kMaxMagnitude = 0.1;

  RabiError() = default;
  RabiError(double epsilon, double kappa = 0.0);

  double epsilon() const { return epsilon_; }
  double kappa() const { return kappa_; }
  double epsilon0() const { return epsilon_ + kappa_; }
  double epsilon1() const { return epsilon_ - kappa_; }

 private:
  double epsilon_ = 0.0;
  double kappa_ = 0.0;
};

struct BrightDark {
  Ket bright;
  Ket dark;
};

/// |b> = cos(theta/2)|0> + sin(theta/2) e^{i psi}|1>,
/// |d> = sin(theta/2)|0> - cos(theta/2) e^{i psi}|1>.
BrightDark bright_dark(double theta, double psi);

/// (sin theta cos psi, sin theta sin psi, cos theta); |b><b| - |d><d| = n.sigma.
Vec3 bloch_vector(double theta, double psi);

/// e^{i phi}|b><e| + e^{-i phi}|e><b|.
HermitianGenerator lambda_generator(const Ket& bright, double phi);

/// Two-loop gate U2 U1 with U_nu = -|e><e| - n_nu.sigma.
UnitaryMatrix two_loop_ideal(const TwoLoopPath& path);

/// Common-error two-loop gate. Requires kappa == 0.
UnitaryMatrix two_loop_errored(const TwoLoopPath& path, const RabiError& error);

/// Errored pulse-pair generator with independent amplitude errors on the two
/// arms; its coupling vector has norm 1 + delta and direction |b'>.
HermitianGenerator relative_error_generator(const LoopParams& loop, const RabiError& error);

/// Two-loop gate under independent arm errors, propagated from the errored
/// Hamiltonian of each loop at area pi.
UnitaryMatrix two_loop_errored_relative(const TwoLoopPath& path, const RabiError& error);

/// Same gate assembled in factored form
/// U2' exp(-i delta2 pi h2') exp(-i delta1 pi h1') U1'.
UnitaryMatrix two_loop_errored_relative_factored(const TwoLoopPath& path, const RabiError& error);

/// Errored ratio angle 2 atan(tan(theta/2) (1 + epsilon1) / (1 + epsilon0)).
double errored_theta(double theta, const RabiError& error);
/// Amplitude excess sqrt((1+e0)^2 cos^2(theta/2) + (1+e1)^2 sin^2(theta/2)) - 1.
double errored_delta(double theta, const RabiError& error);

UnitaryMatrix single_loop_ideal(const SingleLoopPath& path);
/// Requires kappa == 0.
UnitaryMatrix single_loop_errored(const SingleLoopPath& path, const RabiError& error);

/// Closed form e^{i zeta}(|e><e| + |b><b|) + |d><d|, zeta = pi - pi sin(gamma).
UnitaryMatrix single_shot_ideal(const SingleShotPath& path);
/// Single-shot Hamiltonian in units of Omega, including the error on the
/// Rabi terms only: 2 sin(gamma)|e><e| + (1+eps) cos(gamma)(|b><e| + |e><b|).
HermitianGenerator single_shot_generator(const SingleShotPath& path, double epsilon);
/// exp(-i pi H/Omega) of the single-shot Hamiltonian.
UnitaryMatrix single_shot_from_hamiltonian(const SingleShotPath& path, const RabiError& error);
/// Closed form e^{-i pi sin(gamma) P} e^{-i lambda pi sigma_eps} + |d><d|. Requires kappa == 0.
UnitaryMatrix single_shot_errored(const SingleShotPath& path, const RabiError& error);
/// The normalized operator sigma_eps on span{b, e}.
Matrix3c single_shot_sigma(const SingleShotPath& path, double epsilon);
Ket single_shot_bright(const SingleShotPath& path);

/// Decomposition e^{i phi2}|b2> = cos(eta/2) e^{i(phi_b + phi1)}|b1> + sin(eta/2) e^{i phi_d}|d1>.
struct BrightDecomposition {
  double eta = 0.0;
  /// Absent when <b1|b2> = 0 (eta = pi); the phase is undefined there.
  std::optional<double> phi_b;
  /// Absent when eta = 0.
  std::optional<double> phi_d;

  bool degenerate() const { return !phi_b.has_value(); }
};

BrightDecomposition phi_b_of(const TwoLoopPath& path);

}  // namespace holo
