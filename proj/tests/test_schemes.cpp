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

#include "holo/schemes.hpp"

using namespace holo;

namespace {

struct Rng {
  explicit Rng(std::uint64_t seed) : gen(seed) { std::cout << "seed " << seed << "\n"; }
  double operator()(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
  LoopParams loop() { return LoopParams((*this)(0, kPi), (*this)(0, 2 * kPi), (*this)(0, 2 * kPi)); }
  std::mt19937_64 gen;
};

// Qubit block of U2 U1 for U = -|e><e| - n.sigma: n1.n2 - i (n1 x n2).sigma.
Matrix3c expected_two_loop(const TwoLoopPath& p) {
  const Vec3 n1 = bloch_vector(p.loop1.theta(), p.loop1.psi());
  const Vec3 n2 = bloch_vector(p.loop2.theta(), p.loop2.psi());
  Matrix3c m = qubit_identity();
  m *= dot(n1, n2);
  Matrix3c s = pauli_dot(cross(n1, n2));
  s *= Complex{0, -1};
  m += s;
  m(kExcited, kExcited) = 1.0;
  return m;
}

}  // namespace

TEST_CASE("bright and dark states") {
  Rng r(21);
  for (int i = 0; i < 50; ++i) {
    const double t = r(0, kPi), p = r(0, 2 * kPi);
    const BrightDark bd = bright_dark(t, p);
    CHECK(std::abs(inner(bd.bright, bd.dark)) < 1e-15);
    CHECK(bd.bright.norm() == doctest::Approx(1.0));
    Matrix3c proj = Matrix3c::outer(bd.bright, bd.bright);
    proj -= Matrix3c::outer(bd.dark, bd.dark);
    CHECK(max_abs_diff(proj, pauli_dot(bloch_vector(t, p))) < 1e-15);
  }
}

TEST_CASE("parameter domains") {
  CHECK_THROWS_AS(LoopParams(kPi + 0.1, 0, 0), DomainError);
  CHECK(LoopParams(1.0, -kPi / 2, 5 * kPi).psi() == doctest::Approx(3 * kPi / 2));
  CHECK_THROWS_AS(RabiError(0.2), DomainError);
  CHECK_THROWS_AS(RabiError(0.0, -0.11), DomainError);
  const RabiError e(0.05, 0.02);
  CHECK(e.epsilon0() == doctest::Approx(0.07));
  CHECK(e.epsilon1() == doctest::Approx(0.03));
  CHECK_THROWS_AS(SingleShotPath(kPi, 0, 0, 0), DomainError);
}

TEST_CASE("two-loop ideal gate is a qubit rotation") {
  Rng r(22);
  for (int i = 0; i < 100; ++i) {
    const TwoLoopPath p{r.loop(), r.loop()};
    CHECK(max_abs_diff(two_loop_ideal(p).matrix(), expected_two_loop(p)) < 1e-13);
  }
}

TEST_CASE("errored two-loop forms agree") {
  Rng r(23);
  for (int i = 0; i < 100; ++i) {
    const TwoLoopPath p{r.loop(), r.loop()};
    const double eps = r(-0.1, 0.1), kappa = r(-0.1, 0.1);
    CHECK(max_abs_diff(two_loop_errored(p, RabiError(eps)).matrix(),
                       two_loop_errored_relative(p, RabiError(eps)).matrix()) < 1e-13);
    CHECK(max_abs_diff(two_loop_errored_relative(p, RabiError(eps, kappa)).matrix(),
                       two_loop_errored_relative_factored(p, RabiError(eps, kappa)).matrix()) < 1e-12);
  }
  const TwoLoopPath p{r.loop(), r.loop()};
  CHECK_THROWS_AS(two_loop_errored(p, RabiError(0.01, 0.01)), DomainError);
}

TEST_CASE("errored ratio angle and amplitude") {
  // scipy reference: theta = pi/3, eps = 1e-2, kappa = 5e-3.
  const RabiError e(1e-2, 5e-3);
  CHECK(kPi / 3 - errored_theta(kPi / 3, e) == doctest::Approx(0.008553285175353587).epsilon(1e-12));
  CHECK(errored_delta(kPi / 3, e) == doctest::Approx(0.012509259216921809).epsilon(1e-12));
  CHECK(errored_delta(kPi / 2, e) == doctest::Approx(0.010012376161797176).epsilon(1e-12));
  CHECK(errored_theta(1.2, RabiError()) == doctest::Approx(1.2));
  CHECK(errored_delta(1.2, RabiError(0.03)) == doctest::Approx(0.03));
}

TEST_CASE("single-loop gate") {
  Rng r(24);
  for (int i = 0; i < 50; ++i) {
    const SingleLoopPath p(r(0, kPi), r(0, 2 * kPi), r(0, 2 * kPi), r(0, 2 * kPi));
    const BrightDark bd = bright_dark(p.theta(), p.psi());
    // The dark state is untouched and the excited level decouples.
    const Ket d = single_loop_ideal(p).matrix() * bd.dark;
    CHECK(std::abs(inner(bd.dark, d)) == doctest::Approx(1.0));
    CHECK(std::abs(single_loop_ideal(p)(kExcited, kExcited)) == doctest::Approx(1.0));
    CHECK(unitarity_defect(single_loop_errored(p, RabiError(r(-0.1, 0.1))).matrix()) < 1e-13);
  }
}

TEST_CASE("single-shot closed forms match the Hamiltonian") {
  Rng r(25);
  for (int i = 0; i < 100; ++i) {
    const SingleShotPath p(r(0, kPi / 2), r(0, 2 * kPi), r(0, 2 * kPi), r(-kPi / 2, kPi / 2));
    const RabiError e(i % 4 == 0 ? 0.0 : r(-0.1, 0.1));
    CHECK(max_abs_diff(single_shot_from_hamiltonian(p, e).matrix(), single_shot_errored(p, e).matrix()) < 1e-12);
    CHECK(max_abs_diff(single_shot_from_hamiltonian(p, RabiError()).matrix(), single_shot_ideal(p).matrix()) <
          1e-12);
  }
}

TEST_CASE("single-shot drive round trip") {
  const SingleShotPath p(0.4, 0.3, 1.9, -0.6);
  const SingleShotPath q = SingleShotPath::from_drive(p.drive(2.5));
  CHECK(q.alpha() == doctest::Approx(p.alpha()));
  CHECK(q.gamma() == doctest::Approx(p.gamma()));
  CHECK(angle_distance(q.beta1() - q.beta0(), p.beta1() - p.beta0()) < 1e-12);
}

TEST_CASE("bright-state decomposition") {
  const TwoLoopPath orthogonal{LoopParams(0, 0, 0), LoopParams(kPi, 0, 0)};
  const BrightDecomposition d = phi_b_of(orthogonal);
  CHECK(d.degenerate());
  CHECK(d.eta == doctest::Approx(kPi));

  const TwoLoopPath same{LoopParams(1.0, 0.5, 0.2), LoopParams(1.0, 0.5, 1.2)};
  const BrightDecomposition s = phi_b_of(same);
  REQUIRE(s.phi_b.has_value());
  CHECK(s.eta == doctest::Approx(0.0));
  CHECK(*s.phi_b == doctest::Approx(1.0));
  CHECK_FALSE(s.phi_d.has_value());
}
