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

// Dense complex linear algebra on the three-level space spanned by
// |0>, |1>, |e>. Index 0 and 1 are the qubit levels, index 2 is the
// ancillary excited level; every matrix in the project uses this order.

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace holo {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr std::size_t kDim = 3;
inline constexpr std::size_t kExcited = 2;

/// Raised when an argument breaks a structural precondition
/// (non-Hermitian generator, non-unitary gate, ...).
class ContractViolation : public std::invalid_argument {
 public:
  explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a parameter lies outside the range a model is defined on.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  Vec3 normalized() const;
};

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& v);
double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
/// Angle between two nonzero vectors in [0, pi], via atan2 for accuracy near 0 and pi.
double angle_between(const Vec3& a, const Vec3& b);

struct Ket {
  std::array<Complex, kDim> amp{};

  Complex& operator[](std::size_t i) { return amp[i]; }
  const Complex& operator[](std::size_t i) const { return amp[i]; }
  double norm() const;
};

Ket operator+(const Ket& a, const Ket& b);
Ket operator*(Complex s, const Ket& k);
/// <a|b>, conjugate-linear in the first argument.
Complex inner(const Ket& a, const Ket& b);
Ket basis_ket(std::size_t i);

class Matrix3c {
 public:
  Matrix3c() = default;

  static Matrix3c identity();
  static Matrix3c zero() { return Matrix3c{}; }
  /// |a><b|
  static Matrix3c outer(const Ket& a, const Ket& b);

  Complex& operator()(std::size_t r, std::size_t c) { return m_[r * kDim + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return m_[r * kDim + c]; }

  Matrix3c adjoint() const;
  Complex trace() const;
  /// Largest entry modulus.
  double max_abs() const;

  Matrix3c& operator+=(const Matrix3c& o);
  Matrix3c& operator-=(const Matrix3c& o);
  Matrix3c& operator*=(Complex s);

 private:
  std::array<Complex, kDim * kDim> m_{};
};

Matrix3c operator+(Matrix3c a, const Matrix3c& b);
Matrix3c operator-(Matrix3c a, const Matrix3c& b);
Matrix3c operator*(Complex s, Matrix3c a);
Matrix3c operator*(const Matrix3c& a, const Matrix3c& b);
Ket operator*(const Matrix3c& a, const Ket& k);

/// Entrywise max-modulus distance.
double max_abs_diff(const Matrix3c& a, const Matrix3c& b);
bool is_hermitian(const Matrix3c& m, double tol);
/// max |U^dagger U - I| entrywise.
double unitarity_defect(const Matrix3c& m);

/// Embeds n.sigma on the qubit block; the excited row and column stay zero.
Matrix3c pauli_dot(const Vec3& n);
/// |0><0| + |1><1|.
Matrix3c qubit_identity();
/// |e><e|.
Matrix3c excited_projector();

/// A Hermitian 3x3 matrix. Construction validates H = H^dagger within 1e-12.
class HermitianGenerator {
 public:
  static HermitianGenerator from(const Matrix3c& m);

  const Matrix3c& matrix() const { return m_; }

 private:
  explicit HermitianGenerator(const Matrix3c& m) : m_(m) {}
  Matrix3c m_;
};

/// A unitary 3x3 matrix. Construction validates U^dagger U = I within the
/// structural tolerance 1e-10; algebraic constructors land far inside it.
class UnitaryMatrix {
 public:
  static constexpr double kStructuralTol = 1e-10;

  UnitaryMatrix() : m_(Matrix3c::identity()) {}
  static UnitaryMatrix from(const Matrix3c& m, double tol = kStructuralTol);
  static UnitaryMatrix identity() { return UnitaryMatrix{}; }

  const Matrix3c& matrix() const { return m_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  UnitaryMatrix adjoint() const { return UnitaryMatrix(m_.adjoint()); }

  friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    return UnitaryMatrix(a.m_ * b.m_);
  }

 private:
  explicit UnitaryMatrix(const Matrix3c& m) : m_(m) {}
  Matrix3c m_;
};

/// True when the generator has the Lambda structure |w><e| + |e><w| + c|e><e|:
/// vanishing qubit block, arbitrary coupling vector w and real excited-level
/// detuning c.
bool is_lambda_form(const HermitianGenerator& g, double tol = 1e-14);

/// exp(-i * angle * G) using the two-level rotation inside span{w, e}.
/// Throws ContractViolation if G is not of Lambda form.
UnitaryMatrix expm_lambda(const HermitianGenerator& g, double angle);

/// exp(-i * angle * G) from the eigendecomposition of G.
UnitaryMatrix expm_spectral(const HermitianGenerator& g, double angle);

/// exp(-i * angle * G); closed form for Lambda-form generators, spectral otherwise.
UnitaryMatrix expm(const HermitianGenerator& g, double angle);

/// |Tr(V^dagger V_e)| / Tr(V^dagger V); for unitaries the denominator is 3.
double gate_fidelity(const UnitaryMatrix& ideal, const UnitaryMatrix& errored);

/// Both inputs must be block diagonal across the qubit/|e> split within 1e-10.
/// Returns min over chi of max |a_q - e^{i chi} b_q| over the 2x2 qubit blocks.
double projective_distance_qubit(const UnitaryMatrix& a, const UnitaryMatrix& b);

/// Reduces an angle to [0, 2 pi).
double wrap_angle(double a);
/// Distance between two angles on the circle, in [0, pi].
double angle_distance(double a, double b);

}  // namespace holo
