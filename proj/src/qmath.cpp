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

#include "holo/qmath.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace holo {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kBlockTol = 1e-10;

}  // namespace

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

Vec3 Vec3::normalized() const {
  const double n = norm();
  if (n == 0.0) {
    throw ContractViolation("cannot normalize the zero vector");
  }
  return {x / n, y / n, z / n};
}

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double angle_between(const Vec3& a, const Vec3& b) {
  return std::atan2(cross(a, b).norm(), dot(a, b));
}

double Ket::norm() const {
  double s = 0.0;
  for (const auto& c : amp) s += std::norm(c);
  return std::sqrt(s);
}

Ket operator+(const Ket& a, const Ket& b) {
  Ket r;
  for (std::size_t i = 0; i < kDim; ++i) r[i] = a[i] + b[i];
  return r;
}

Ket operator*(Complex s, const Ket& k) {
  Ket r;
  for (std::size_t i = 0; i < kDim; ++i) r[i] = s * k[i];
  return r;
}

Complex inner(const Ket& a, const Ket& b) {
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < kDim; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

Ket basis_ket(std::size_t i) {
  Ket k;
  k[i] = 1.0;
  return k;
}

Matrix3c Matrix3c::identity() {
  Matrix3c m;
  for (std::size_t i = 0; i < kDim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix3c Matrix3c::outer(const Ket& a, const Ket& b) {
  Matrix3c m;
  for (std::size_t r = 0; r < kDim; ++r)
    for (std::size_t c = 0; c < kDim; ++c) m(r, c) = a[r] * std::conj(b[c]);
  return m;
}

Matrix3c Matrix3c::adjoint() const {
  Matrix3c m;
  for (std::size_t r = 0; r < kDim; ++r)
    for (std::size_t c = 0; c < kDim; ++c) m(r, c) = std::conj((*this)(c, r));
  return m;
}

Complex Matrix3c::trace() const { return m_[0] + m_[4] + m_[8]; }

double Matrix3c::max_abs() const {
  double best = 0.0;
  for (const auto& c : m_) best = std::max(best, std::abs(c));
  return best;
}

Matrix3c& Matrix3c::operator+=(const Matrix3c& o) {
  for (std::size_t i = 0; i < m_.size(); ++i) m_[i] += o.m_[i];
  return *this;
}

Matrix3c& Matrix3c::operator-=(const Matrix3c& o) {
  for (std::size_t i = 0; i < m_.size(); ++i) m_[i] -= o.m_[i];
  return *this;
}

Matrix3c& Matrix3c::operator*=(Complex s) {
  for (auto& c : m_) c *= s;
  return *this;
}

Matrix3c operator+(Matrix3c a, const Matrix3c& b) { return a += b; }
Matrix3c operator-(Matrix3c a, const Matrix3c& b) { return a -= b; }
Matrix3c operator*(Complex s, Matrix3c a) { return a *= s; }

Matrix3c operator*(const Matrix3c& a, const Matrix3c& b) {
  Matrix3c m;
  for (std::size_t r = 0; r < kDim; ++r)
    for (std::size_t c = 0; c < kDim; ++c) {
      Complex s{0.0, 0.0};
      for (std::size_t k = 0; k < kDim; ++k) s += a(r, k) * b(k, c);
      m(r, c) = s;
    }
  return m;
}

Ket operator*(const Matrix3c& a, const Ket& k) {
  Ket r;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) r[i] += a(i, j) * k[j];
  return r;
}

double max_abs_diff(const Matrix3c& a, const Matrix3c& b) { return (a - b).max_abs(); }

bool is_hermitian(const Matrix3c& m, double tol) { return max_abs_diff(m, m.adjoint()) <= tol; }

double unitarity_defect(const Matrix3c& m) {
  return max_abs_diff(m.adjoint() * m, Matrix3c::identity());
}

Matrix3c pauli_dot(const Vec3& n) {
  Matrix3c m;
  m(0, 0) = n.z;
  m(1, 1) = -n.z;
  m(0, 1) = Complex{n.x, -n.y};
  m(1, 0) = Complex{n.x, n.y};
  return m;
}

Matrix3c qubit_identity() {
  Matrix3c m;
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  return m;
}

Matrix3c excited_projector() {
  Matrix3c m;
  m(kExcited, kExcited) = 1.0;
  return m;
}

HermitianGenerator HermitianGenerator::from(const Matrix3c& m) {
  for (std::size_t r = 0; r < kDim; ++r)
    for (std::size_t c = 0; c < kDim; ++c)
      if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag()))
        throw ContractViolation("generator has non-finite entries");
  if (!is_hermitian(m, kHermitianTol)) {
    std::ostringstream os;
    os << "generator is not Hermitian (|H - H^dagger| = " << max_abs_diff(m, m.adjoint()) << ")";
    throw ContractViolation(os.str());
  }
  return HermitianGenerator(m);
}

UnitaryMatrix UnitaryMatrix::from(const Matrix3c& m, double tol) {
  const double defect = unitarity_defect(m);
  if (!(defect <= tol)) {
    std::ostringstream os;
    os << "matrix is not unitary (|U^dagger U - I| = " << defect << ")";
    throw ContractViolation(os.str());
  }
  return UnitaryMatrix(m);
}

bool is_lambda_form(const HermitianGenerator& g, double tol) {
  const Matrix3c& m = g.matrix();
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      if (std::abs(m(r, c)) > tol) return false;
  return true;
}

UnitaryMatrix expm_lambda(const HermitianGenerator& g, double angle) {
  if (!is_lambda_form(g)) {
    throw ContractViolation("expm_lambda: generator has a nonzero qubit block");
  }
  const Matrix3c& h = g.matrix();
  const Complex w0 = h(0, kExcited);
  const Complex w1 = h(1, kExcited);
  const double detuning = h(kExcited, kExcited).real();
  const double r2 = std::norm(w0) + std::norm(w1);

  Matrix3c out;
  const Complex half_phase = std::polar(1.0, -0.5 * angle * detuning);
  if (r2 == 0.0) {
    out(0, 0) = 1.0;
    out(1, 1) = 1.0;
    out(kExcited, kExcited) = std::polar(1.0, -angle * detuning);
    return UnitaryMatrix::from(out);
  }

  // Inside span{w, e} the generator is (c/2) I + K with K^2 = mu^2 I.
  const double mu = std::sqrt(r2 + 0.25 * detuning * detuning);
  const double cos_t = std::cos(angle * mu);
  const double sinc_t = (angle * mu == 0.0) ? angle : std::sin(angle * mu) / mu;

  // Projector onto w inside the qubit block.
  Matrix3c pw;
  const std::array<Complex, 2> w{w0, w1};
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) pw(r, c) = w[r] * std::conj(w[c]) / r2;

  Matrix3c k = h;
  k(kExcited, kExcited) -= 0.5 * detuning;
  k -= Complex{0.5 * detuning, 0.0} * pw;

  Matrix3c sub = pw + excited_projector();
  out = qubit_identity() - pw;
  out += half_phase * (Complex{cos_t, 0.0} * sub - Complex{0.0, sinc_t} * k);
  return UnitaryMatrix::from(out);
}

UnitaryMatrix expm_spectral(const HermitianGenerator& g, double angle) {
  Eigen::Matrix3cd h;
  for (std::size_t r = 0; r < kDim; ++r)
    for (std::size_t c = 0; c < kDim; ++c)
      h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = g.matrix()(r, c);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw ContractViolation("expm_spectral: eigendecomposition failed");
  }
  const Eigen::Matrix3cd& v = solver.eigenvectors();
  Eigen::Vector3cd phases;
  for (Eigen::Index i = 0; i < 3; ++i) phases(i) = std::polar(1.0, -angle * solver.eigenvalues()(i));
  const Eigen::Matrix3cd u = v * phases.asDiagonal() * v.adjoint();

  Matrix3c out;
  for (std::size_t r = 0; r < kDim; ++r)
    for (std::size_t c = 0; c < kDim; ++c)
      out(r, c) = u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  return UnitaryMatrix::from(out);
}

UnitaryMatrix expm(const HermitianGenerator& g, double angle) {
  if (!std::isfinite(angle)) throw ContractViolation("expm: angle must be finite");
  if (angle == 0.0) return UnitaryMatrix::identity();
  return is_lambda_form(g) ? expm_lambda(g, angle) : expm_spectral(g, angle);
}

double gate_fidelity(const UnitaryMatrix& ideal, const UnitaryMatrix& errored) {
  // UnitaryMatrix guarantees unitarity, so Tr(V^dagger V) = 3 up to roundoff.
  const Complex overlap = (ideal.matrix().adjoint() * errored.matrix()).trace();
  return std::min(1.0, std::abs(overlap) / static_cast<double>(kDim));
}

namespace {

void require_block_diagonal(const UnitaryMatrix& u, const char* name) {
  const double off = std::max({std::abs(u(0, kExcited)), std::abs(u(1, kExcited)),
                               std::abs(u(kExcited, 0)), std::abs(u(kExcited, 1))});
  if (off > kBlockTol) {
    std::ostringstream os;
    os << "projective_distance_qubit: " << name
       << " couples the qubit block to |e> (off-block modulus " << off << ")";
    throw ContractViolation(os.str());
  }
}

double phased_block_distance(const UnitaryMatrix& a, const UnitaryMatrix& b, double chi) {
  const Complex phase = std::polar(1.0, chi);
  double worst = 0.0;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) worst = std::max(worst, std::abs(a(r, c) - phase * b(r, c)));
  return worst;
}

}  // namespace

double projective_distance_qubit(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  require_block_diagonal(a, "first argument");
  require_block_diagonal(b, "second argument");

  auto cost = [&](double chi) { return phased_block_distance(a, b, chi); };

  // Least-squares phase first; it is exact whenever the blocks agree up to phase.
  Complex overlap{0.0, 0.0};
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) overlap += std::conj(b(r, c)) * a(r, c);
  double best_chi = std::arg(overlap);
  double best = cost(best_chi);

  constexpr int kGrid = 720;
  const double step = 2.0 * kPi / kGrid;
  for (int i = 0; i < kGrid; ++i) {
    const double chi = i * step;
    const double c = cost(chi);
    if (c < best) {
      best = c;
      best_chi = chi;
    }
  }

  // Golden-section refinement of the minimax objective around the best point.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_chi - step;
  double hi = best_chi + step;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = cost(x1);
  double f2 = cost(x2);
  for (int it = 0; it < 80 && hi - lo > 1e-14; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = cost(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = cost(x2);
    }
  }
  return std::min({best, f1, f2});
}

double wrap_angle(double a) {
  const double two_pi = 2.0 * kPi;
  double r = std::fmod(a, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;
  return r;
}

double angle_distance(double a, double b) {
  const double d = wrap_angle(a - b);
  return std::min(d, 2.0 * kPi - d);
}

}  // namespace holo
