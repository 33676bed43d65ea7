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

#include "holo/schemes.hpp"

#include <cmath>
#include <sstream>

namespace holo {

namespace {

constexpr double kDegenerateOverlap = 1e-12;

void require_theta(double theta, const char* where) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    std::ostringstream os;
    os << where << ": theta = " << theta << " outside [0, pi]";
    throw DomainError(os.str());
  }
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

void require_common_error(const RabiError& error, const char* where) {
  if (error.kappa() != 0.0) {
    throw DomainError(std::string(where) +
                      ": relative error kappa must be zero for the common-error model");
  }
}

// -|e><e| - |b><b| + |d><d|, the resonant pi-pulse on the loop's bright state.
Matrix3c pi_pulse(const BrightDark& bd) {
  Matrix3c m = Matrix3c::outer(bd.dark, bd.dark);
  m -= Matrix3c::outer(bd.bright, bd.bright);
  m -= excited_projector();
  return m;
}

}  // namespace

LoopParams::LoopParams(double theta, double psi, double phi) {
  require_theta(theta, "LoopParams");
  require_finite(psi, "psi");
  require_finite(phi, "phi");
  theta_ = theta;
  psi_ = wrap_angle(psi);
  phi_ = wrap_angle(phi);
}

SingleLoopPath::SingleLoopPath(double theta, double psi, double phi, double phi_prime) {
  require_theta(theta, "SingleLoopPath");
  require_finite(psi, "psi");
  require_finite(phi, "phi");
  require_finite(phi_prime, "phi_prime");
  theta_ = theta;
  psi_ = wrap_angle(psi);
  phi_ = wrap_angle(phi);
  phi_prime_ = wrap_angle(phi_prime);
}

SingleShotPath::SingleShotPath(double alpha, double beta0, double beta1, double gamma) {
  if (!(alpha >= 0.0 && alpha <= 0.5 * kPi)) throw DomainError("SingleShotPath: alpha outside [0, pi/2]");
  if (!(gamma >= -0.5 * kPi && gamma <= 0.5 * kPi))
    throw DomainError("SingleShotPath: gamma outside [-pi/2, pi/2]");
  require_finite(beta0, "beta0");
  require_finite(beta1, "beta1");
  alpha_ = alpha;
  beta0_ = wrap_angle(beta0);
  beta1_ = wrap_angle(beta1);
  gamma_ = gamma;
}

SingleShotPath SingleShotPath::from_drive(const SingleShotDrive& drive) {
  if (drive.omega0 < 0.0 || drive.omega1 < 0.0)
    throw DomainError("SingleShotPath::from_drive: Rabi amplitudes must be non-negative");
  const double coupling = std::hypot(drive.omega0, drive.omega1);
  if (coupling == 0.0 && drive.detuning == 0.0)
    throw DomainError("SingleShotPath::from_drive: zero drive");
  const double gamma = std::atan2(-0.5 * drive.detuning, coupling);
  const double alpha = coupling == 0.0 ? 0.0 : std::atan2(drive.omega1, drive.omega0);
  return SingleShotPath(alpha, drive.beta0, drive.beta1, gamma);
}

SingleShotDrive SingleShotPath::drive(double omega) const {
  if (!(omega > 0.0)) throw DomainError("SingleShotPath::drive: Omega must be positive");
  SingleShotDrive d;
  d.detuning = -2.0 * omega * std::sin(gamma_) + 0.0;  // no signed zero in output
  d.omega0 = omega * std::cos(alpha_) * std::cos(gamma_);
  d.omega1 = omega * std::sin(alpha_) * std::cos(gamma_);
  d.beta0 = beta0_;
  d.beta1 = beta1_;
  return d;
}

RabiError::RabiError(double epsilon, double kappa) : epsilon_(epsilon), kappa_(kappa) {
  if (!(std::abs(epsilon) <= kMaxMagnitude) || !(std::abs(kappa) <= kMaxMagnitude)) {
    std::ostringstream os;
    os << "RabiError: |epsilon| and |kappa| must be <= " << kMaxMagnitude << " (got epsilon = "
       << epsilon << ", kappa = " << kappa << ")";
    throw DomainError(os.str());
  }
}

BrightDark bright_dark(double theta, double psi) {
  require_theta(theta, "bright_dark");
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const Complex ph = std::polar(1.0, psi);
  BrightDark bd;
  bd.bright[0] = c;
  bd.bright[1] = s * ph;
  bd.dark[0] = s;
  bd.dark[1] = -c * ph;
  return bd;
}

Vec3 bloch_vector(double theta, double psi) {
  require_theta(theta, "bloch_vector");
  const double s = std::sin(theta);
  return {s * std::cos(psi), s * std::sin(psi), std::cos(theta)};
}

HermitianGenerator lambda_generator(const Ket& bright, double phi) {
  const Ket e = basis_ket(kExcited);
  const Matrix3c half = std::polar(1.0, phi) * Matrix3c::outer(bright, e);
  return HermitianGenerator::from(half + half.adjoint());
}

UnitaryMatrix two_loop_ideal(const TwoLoopPath& path) {
  auto loop = [](const LoopParams& p) {
    Matrix3c u = pauli_dot(bloch_vector(p.theta(), p.psi()));
    u *= -1.0;
    u -= excited_projector();
    return u;
  };
  return UnitaryMatrix::from(loop(path.loop2) * loop(path.loop1));
}

UnitaryMatrix two_loop_errored(const TwoLoopPath& path, const RabiError& error) {
  require_common_error(error, "two_loop_errored");
  const BrightDark bd1 = bright_dark(path.loop1.theta(), path.loop1.psi());
  const BrightDark bd2 = bright_dark(path.loop2.theta(), path.loop2.psi());
  const UnitaryMatrix u1 = UnitaryMatrix::from(pi_pulse(bd1));
  const UnitaryMatrix u2 = UnitaryMatrix::from(pi_pulse(bd2));
  const double area = error.epsilon() * kPi;
  const UnitaryMatrix e1 = expm(lambda_generator(bd1.bright, path.loop1.phi()), area);
  const UnitaryMatrix e2 = expm(lambda_generator(bd2.bright, path.loop2.phi()), area);
  return u2 * e2 * e1 * u1;
}

double errored_theta(double theta, const RabiError& error) {
  require_theta(theta, "errored_theta");
  // atan2 form stays finite at theta = pi.
  return 2.0 * std::atan2((1.0 + error.epsilon1()) * std::sin(0.5 * theta),
                          (1.0 + error.epsilon0()) * std::cos(0.5 * theta));
}

double errored_delta(double theta, const RabiError& error) {
  require_theta(theta, "errored_delta");
  const double c = (1.0 + error.epsilon0()) * std::cos(0.5 * theta);
  const double s = (1.0 + error.epsilon1()) * std::sin(0.5 * theta);
  return std::hypot(c, s) - 1.0;
}

HermitianGenerator relative_error_generator(const LoopParams& loop, const RabiError& error) {
  Ket coupling;
  coupling[0] = (1.0 + error.epsilon0()) * std::cos(0.5 * loop.theta());
  coupling[1] = (1.0 + error.epsilon1()) * std::sin(0.5 * loop.theta()) * std::polar(1.0, loop.psi());
  return lambda_generator(coupling, loop.phi());
}

UnitaryMatrix two_loop_errored_relative(const TwoLoopPath& path, const RabiError& error) {
  const UnitaryMatrix u1 = expm(relative_error_generator(path.loop1, error), kPi);
  const UnitaryMatrix u2 = expm(relative_error_generator(path.loop2, error), kPi);
  return u2 * u1;
}

UnitaryMatrix two_loop_errored_relative_factored(const TwoLoopPath& path, const RabiError& error) {
  auto factors = [&](const LoopParams& loop) {
    const double theta_p = errored_theta(loop.theta(), error);
    const BrightDark bd = bright_dark(theta_p, loop.psi());
    const UnitaryMatrix pulse = UnitaryMatrix::from(pi_pulse(bd));
    const UnitaryMatrix excess =
        expm(lambda_generator(bd.bright, loop.phi()), errored_delta(loop.theta(), error) * kPi);
    return std::pair{pulse, excess};
  };
  const auto [u1, e1] = factors(path.loop1);
  const auto [u2, e2] = factors(path.loop2);
  return u2 * e2 * e1 * u1;
}

UnitaryMatrix single_loop_ideal(const SingleLoopPath& path) {
  const BrightDark bd = bright_dark(path.theta(), path.psi());
  const UnitaryMatrix first = expm(lambda_generator(bd.bright, path.phi()), 0.5 * kPi);
  const UnitaryMatrix second = expm(lambda_generator(bd.bright, path.phi_prime()), 0.5 * kPi);
  return second * first;
}

UnitaryMatrix single_loop_errored(const SingleLoopPath& path, const RabiError& error) {
  require_common_error(error, "single_loop_errored");
  const BrightDark bd = bright_dark(path.theta(), path.psi());
  const HermitianGenerator h1 = lambda_generator(bd.bright, path.phi());
  const HermitianGenerator h2 = lambda_generator(bd.bright, path.phi_prime());
  const double excess = 0.5 * kPi * error.epsilon();
  return expm(h2, 0.5 * kPi) * expm(h2, excess) * expm(h1, excess) * expm(h1, 0.5 * kPi);
}

Ket single_shot_bright(const SingleShotPath& path) {
  Ket b;
  b[0] = std::cos(path.alpha()) * std::polar(1.0, path.beta0());
  b[1] = std::sin(path.alpha()) * std::polar(1.0, path.beta1());
  return b;
}

namespace {

// |e><e| + |b><b| and |d><d| = I_qubit - |b><b| for the single-shot bright state.
std::pair<Matrix3c, Matrix3c> single_shot_projectors(const SingleShotPath& path) {
  const Ket b = single_shot_bright(path);
  const Matrix3c bb = Matrix3c::outer(b, b);
  return {bb + excited_projector(), qubit_identity() - bb};
}

}  // namespace

UnitaryMatrix single_shot_ideal(const SingleShotPath& path) {
  const auto [bright_e, dark] = single_shot_projectors(path);
  const double zeta = kPi - kPi * std::sin(path.gamma());
  return UnitaryMatrix::from(std::polar(1.0, zeta) * bright_e + dark);
}

HermitianGenerator single_shot_generator(const SingleShotPath& path, double epsilon) {
  const Ket b = single_shot_bright(path);
  const Ket e = basis_ket(kExcited);
  const Matrix3c be = Matrix3c::outer(b, e);
  Matrix3c h = Complex{(1.0 + epsilon) * std::cos(path.gamma()), 0.0} * (be + be.adjoint());
  h(kExcited, kExcited) += 2.0 * std::sin(path.gamma());
  return HermitianGenerator::from(h);
}

UnitaryMatrix single_shot_from_hamiltonian(const SingleShotPath& path, const RabiError& error) {
  require_common_error(error, "single_shot_from_hamiltonian");
  return expm(single_shot_generator(path, error.epsilon()), kPi);
}

namespace {

double single_shot_lambda(double gamma, double epsilon) {
  return std::hypot((1.0 + epsilon) * std::cos(gamma), std::sin(gamma));
}

}  // namespace

Matrix3c single_shot_sigma(const SingleShotPath& path, double epsilon) {
  const Ket b = single_shot_bright(path);
  const Ket e = basis_ket(kExcited);
  const double lambda = single_shot_lambda(path.gamma(), epsilon);
  const Matrix3c be = Matrix3c::outer(b, e);
  Matrix3c sigma = Complex{(1.0 + epsilon) * std::cos(path.gamma()), 0.0} * (be + be.adjoint());
  sigma += Complex{std::sin(path.gamma()), 0.0} * (excited_projector() - Matrix3c::outer(b, b));
  sigma *= 1.0 / lambda;
  return sigma;
}

UnitaryMatrix single_shot_errored(const SingleShotPath& path, const RabiError& error) {
  require_common_error(error, "single_shot_errored");
  const auto [bright_e, dark] = single_shot_projectors(path);
  const double lambda = single_shot_lambda(path.gamma(), error.epsilon());
  const Matrix3c sigma = single_shot_sigma(path, error.epsilon());
  // sigma^2 = P on span{b, e}, so e^{-i lambda pi sigma} = cos(lambda pi) P - i sin(lambda pi) sigma.
  Matrix3c rot = Complex{std::cos(lambda * kPi), 0.0} * bright_e;
  rot -= Complex{0.0, std::sin(lambda * kPi)} * sigma;
  const Complex shift = std::polar(1.0, -kPi * std::sin(path.gamma()));
  return UnitaryMatrix::from(shift * rot + dark);
}

BrightDecomposition phi_b_of(const TwoLoopPath& path) {
  const BrightDark bd1 = bright_dark(path.loop1.theta(), path.loop1.psi());
  const BrightDark bd2 = bright_dark(path.loop2.theta(), path.loop2.psi());
  const Complex on_bright = inner(bd1.bright, bd2.bright);
  const Complex on_dark = inner(bd1.dark, bd2.bright);

  BrightDecomposition out;
  out.eta = angle_between(bloch_vector(path.loop1.theta(), path.loop1.psi()),
                          bloch_vector(path.loop2.theta(), path.loop2.psi()));
  if (std::abs(on_bright) > kDegenerateOverlap) {
    out.phi_b = wrap_angle(path.loop2.phi() - path.loop1.phi() + std::arg(on_bright));
  }
  if (std::abs(on_dark) > kDegenerateOverlap) {
    out.phi_d = wrap_angle(path.loop2.phi() + std::arg(on_dark));
  }
  return out;
}

}  // namespace holo
