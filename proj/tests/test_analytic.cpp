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
#include <vector>

#include "holo/analytic.hpp"
#include "holo/pathfinder.hpp"

using namespace holo;

namespace {

constexpr double kPi2 = kPi * kPi;

// Unbalanced fixture: theta1 = pi/3, theta2 = pi/2, psi21 = pi/2, phi_b = pi.
TwoLoopPath fixture() { return {LoopParams(kPi / 3, 0, 0), LoopParams(kPi / 2, kPi / 2, 2.6179938779914944)}; }

}  // namespace

TEST_CASE("comparison functions") {
  CHECK(f1(0) == 0.0);
  CHECK(f2(0) == 0.0);
  CHECK(f3(0) == 0.0);
  CHECK(f1(kPi / 2) == doctest::Approx(2 - std::sqrt(2.0)).epsilon(1e-15));
  CHECK(f2(kPi / 2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(f3(kPi / 2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(f3(kPi / 4) == doctest::Approx(0.5625).epsilon(1e-15));
  CHECK_THROWS_AS(f1(-0.1), DomainError);
  CHECK_THROWS_AS(f2(2.0), DomainError);
}

TEST_CASE("second-order fidelity formulas") {
  CHECK(fid2_two_loop(kPi / 2, kPi, 1e-2) ==
        doctest::Approx(1 - (2.0 / 3) * (1 - std::cos(kPi / 4)) * kPi2 * 1e-4).epsilon(1e-15));
  CHECK(fid2_single_loop(0.0, 1e-2) == doctest::Approx(1 - kPi2 * 1e-4 / 3).epsilon(1e-15));
  CHECK(fid2_single_shot(0.0, 1e-2) == doctest::Approx(1 - kPi2 * 1e-4 / 3).epsilon(1e-15));
  CHECK(fid2_single_shot(kPi / 2, 1e-2) == doctest::Approx(1.0));
  CHECK_THROWS_AS(fid2_two_loop(1.0, kPi, 0.2), DomainError);
}

TEST_CASE("relative-error fidelity regression") {
  // Independent scipy evaluation of the same fixture.
  const RelativeErrorFidelity r = fid2_relative(fixture(), RabiError(1e-2, 5e-3));
  CHECK(r.fidelity == doctest::Approx(0.9996824960884839).epsilon(1e-12));
  CHECK(r.breakdown.theta11 == doctest::Approx(0.008553285175353587).epsilon(1e-12));
  CHECK(r.breakdown.theta22 == doctest::Approx(0.009900909217686937).epsilon(1e-12));
  CHECK(r.breakdown.eta_prime == doctest::Approx(1.5657727754886985).epsilon(1e-12));
  CHECK(r.breakdown.y == doctest::Approx(0.013083833177926168).epsilon(1e-12));
  CHECK(r.breakdown.z == doctest::Approx(0.008897459090067398).epsilon(1e-12));
  CHECK_FALSE(r.degenerate());
  CHECK(exact_fidelity_two_loop(fixture(), RabiError(1e-2, 5e-3)) ==
        doctest::Approx(0.9996811298487013).epsilon(1e-12));
}

TEST_CASE("relative-error fidelity reduces to the common-error form") {
  const TwoLoopPath p = fixture();
  const BrightDecomposition d = phi_b_of(p);
  for (double eps : {-0.08, -1e-3, 0.0, 2e-2, 0.1}) {
    CHECK(std::abs(fid2_relative(p, RabiError(eps)).fidelity - fid2_two_loop(d.eta, *d.phi_b, eps)) < 1e-12);
  }
}

TEST_CASE("kappa slope on the unbalanced fixture") {
  const TwoLoopPath p = fixture();
  const double h = 1e-5;
  const double fd = (exact_fidelity_two_loop(p, RabiError(1e-2, h)) - exact_fidelity_two_loop(p, RabiError(1e-2, -h))) /
                    (2 * h);
  CHECK(dF_dkappa_at_zero(p, 1e-2) == doctest::Approx(-9.6358e-3).epsilon(1e-4));
  CHECK(std::abs(fd - dF_dkappa_at_zero(p, 1e-2)) < 1e-5);
}

TEST_CASE("quadratic coefficient extraction") {
  auto f = [](double e) { return 1 - 2.0 * e * e + 0.3 * e * e * e + 5.0 * e * e * e * e; };
  const QuadraticFit fit = quadratic_coefficient_of(f, default_extraction_epsilons());
  CHECK(fit.coefficient == doctest::Approx(2.0).epsilon(1e-6));

  std::vector<FidelitySample> too_few{{1e-3, 0.9}, {-1e-3, 0.9}};
  CHECK_THROWS_AS(extract_quadratic_coefficient(too_few), ContractViolation);
  std::vector<FidelitySample> zero_eps{{0.0, 1.0}, {1e-3, 0.99}, {-1e-3, 0.99}};
  CHECK_THROWS_AS(extract_quadratic_coefficient(zero_eps), ContractViolation);
}

TEST_CASE("two-loop gate at a quarter turn") {
  // 1 - F at eps = 1e-3 from scipy on the balanced path about +z.
  const TwoLoopPath p = solve_two_loop(TargetGate(kPi / 2, Vec3{0, 0, 1})).path;
  const FidelityReport r = report_two_loop(p, 1e-3);
  CHECK(1 - r.exact == doctest::Approx(1.9271578529655997e-06).epsilon(1e-8));
  CHECK(std::abs(r.exact - r.analytic2) < 1e-9);
  CHECK(r.quad_coeff_exact == doctest::Approx(f1(kPi / 2) * kPi2 / 3).epsilon(1e-6));
  CHECK(r.quad_coeff_analytic == doctest::Approx(f1(kPi / 2) * kPi2 / 3).epsilon(1e-12));
}

TEST_CASE("single-loop and single-shot reports") {
  const TargetGate t(kPi / 3, Vec3{1, 1, 0}.normalized());
  const FidelityReport loop = report_single_loop(solve_single_loop(t), 1e-3);
  const FidelityReport shot = report_single_shot(solve_single_shot(t), 1e-3);
  CHECK(loop.quad_coeff_analytic == doctest::Approx(f2(kPi / 3) * kPi2 / 3).epsilon(1e-12));
  CHECK(shot.quad_coeff_analytic == doctest::Approx(f3(kPi / 3) * kPi2 / 3).epsilon(1e-12));
  CHECK(loop.quad_coeff_exact == doctest::Approx(loop.quad_coeff_analytic).epsilon(1e-5));
  CHECK(shot.quad_coeff_exact == doctest::Approx(shot.quad_coeff_analytic).epsilon(1e-5));
}

TEST_CASE("target gate validation") {
  CHECK_THROWS_AS(TargetGate(2.0, Vec3{0, 0, 1}), DomainError);
  CHECK_THROWS(TargetGate(0.5, Vec3{0, 0, 2}));
}
