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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <iostream>
#include <random>

#include "holo/qmath.hpp"

using namespace holo;

namespace {

HermitianGenerator random_lambda(std::mt19937_64& rng, double detuning) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix3c m;
  const Complex a{n(rng), n(rng)};
  const Complex b{n(rng), n(rng)};
  m(0, kExcited) = a;
  m(1, kExcited) = b;
  m(kExcited, 0) = std::conj(a);
  m(kExcited, 1) = std::conj(b);
  m(kExcited, kExcited) = detuning;
  return HermitianGenerator::from(m);
}

}  // namespace

TEST_CASE("vector algebra") {
  const Vec3 x{1, 0, 0}, y{0, 1, 0};
  CHECK(dot(x, y) == 0.0);
  const Vec3 z = cross(x, y);
  CHECK(z.z == doctest::Approx(1.0));
  CHECK(angle_between(x, y) == doctest::Approx(kPi / 2));
  CHECK(angle_between(x, Vec3{-1, 0, 0}) == doctest::Approx(kPi));
  CHECK(Vec3{3, 4, 0}.norm() == doctest::Approx(5.0));
  const Vec3 zero{0, 0, 0};
  CHECK_THROWS_AS((void)zero.normalized(), ContractViolation);
}

TEST_CASE("kets and inner products") {
  const Ket e0 = basis_ket(0), e2 = basis_ket(kExcited);
  CHECK(std::abs(inner(e0, e2)) == 0.0);
  CHECK(inner(e0, e0).real() == doctest::Approx(1.0));
  const Ket s = Complex{0, 1} * e0;
  CHECK(inner(e0, s).imag() == doctest::Approx(1.0));
}

TEST_CASE("generator and unitary validation") {
  Matrix3c m;
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(HermitianGenerator::from(m), ContractViolation);
  m(1, 0) = 1.0;
  CHECK_NOTHROW(HermitianGenerator::from(m));
  Matrix3c bad = Matrix3c::identity();
  bad(0, 0) = 1.1;
  CHECK_THROWS_AS(UnitaryMatrix::from(bad), ContractViolation);
  CHECK(unitarity_defect(UnitaryMatrix().matrix()) == 0.0);
}

TEST_CASE("expm matches a reference value") {
  // Reference entries from scipy.linalg.expm(-0.8j * G).
  Matrix3c g;
  g(0, 0) = 0.3;
  g(0, 1) = Complex{0.2, -0.1};
  g(0, 2) = Complex{0, 0.5};
  g(1, 0) = Complex{0.2, 0.1};
  g(1, 1) = -0.4;
  g(1, 2) = 0.7;
  g(2, 0) = Complex{0, -0.5};
  g(2, 1) = 0.7;
  g(2, 2) = 1.1;
  const UnitaryMatrix u = expm(HermitianGenerator::from(g), 0.8);
  const Complex row0[3] = {{0.8865649654486905, -0.20912888473190827},
                           {-0.09185627866836978, -0.24959086907166034},
                           {0.2693806605185516, -0.1642210507017643}};
  const Complex row2[3] = {{-0.3497737917536981, 0.18609855509453702},
                           {-0.11050402961022515, -0.43923148736947065},
                           {0.44781996494807497, -0.661322509318242}};
  for (std::size_t c = 0; c < 3; ++c) {
    CHECK(std::abs(u(0, c) - row0[c]) < 1e-13);
    CHECK(std::abs(u(2, c) - row2[c]) < 1e-13);
  }
}

TEST_CASE("closed-form and spectral exponentials agree") {
  const std::uint64_t seed = 11;
  std::cout << "seed " << seed << "\n";
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const double detuning = i % 3 == 0 ? 0.0 : u(rng);
    const HermitianGenerator g = random_lambda(rng, detuning);
    REQUIRE(is_lambda_form(g));
    const double angle = u(rng);
    worst = std::max(worst, max_abs_diff(expm_lambda(g, angle).matrix(), expm_spectral(g, angle).matrix()));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("expm at zero angle is the identity") {
  std::mt19937_64 rng(3);
  const HermitianGenerator g = random_lambda(rng, 0.4);
  CHECK(max_abs_diff(expm(g, 0.0).matrix(), Matrix3c::identity()) == 0.0);
}

TEST_CASE("gate fidelity ignores global phase") {
  std::mt19937_64 rng(5);
  const UnitaryMatrix a = expm(random_lambda(rng, 0.2), 1.3);
  Matrix3c shifted = a.matrix();
  shifted *= std::polar(1.0, 0.7);
  CHECK(gate_fidelity(a, UnitaryMatrix::from(shifted)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gate_fidelity(a, UnitaryMatrix()) < 1.0);
}

TEST_CASE("projective distance on the qubit block") {
  Matrix3c m = Matrix3c::identity();
  m(kExcited, kExcited) = -1.0;
  const UnitaryMatrix a = UnitaryMatrix::from(m);
  Matrix3c phased = m;
  phased(0, 0) = phased(1, 1) = std::polar(1.0, 0.3);
  CHECK(projective_distance_qubit(a, UnitaryMatrix::from(phased)) < 1e-9);
  std::mt19937_64 rng(9);
  const UnitaryMatrix mixed = expm(random_lambda(rng, 0.0), 0.5);
  CHECK_THROWS_AS(projective_distance_qubit(a, mixed), ContractViolation);
}

TEST_CASE("angle helpers") {
  CHECK(wrap_angle(-kPi / 2) == doctest::Approx(3 * kPi / 2));
  CHECK(wrap_angle(4 * kPi + 0.25) == doctest::Approx(0.25));
  CHECK(angle_distance(0.1, 2 * kPi - 0.1) == doctest::Approx(0.2));
}
