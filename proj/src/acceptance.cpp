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

#include "holo/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "holo/figure1.hpp"
#include "holo/oracle.hpp"
#include "holo/pathfinder.hpp"

namespace holo {

namespace {

constexpr double kPi2 = kPi * kPi;

// Pinned thresholds.
constexpr double kFigureEndpointTol = 1e-12;
constexpr double kFigureSeconds = 1.0;
constexpr double kCoefficientRelTol = 1e-3;
constexpr double kCoefficientSeconds = 5.0;
constexpr int kPhiScanPoints = 360;
constexpr double kScanEpsilon = 1e-2;
constexpr double kCubicConstant = 10.0;
constexpr int kRelativeGridPoints = 1000;
constexpr double kReductionTol = 1e-12;
constexpr double kKappaStep = 1e-5;
constexpr double kBalancedSlopeTol = 1e-8;
constexpr double kUnbalancedSlope = -9.6358e-3;
constexpr double kUnbalancedSlopeTol = 1e-5;
constexpr std::size_t kOracleSteps = 100000;
constexpr double kOracleTol = 1e-8;
constexpr double kOracleSeconds = 120.0;
constexpr double kUnitarityTol = 1e-12;
constexpr double kZeroErrorTol = 1e-13;
constexpr double kGaugeTol = 1e-13;
constexpr double kRoundTripTol = 1e-10;

using Clock = std::chrono::steady_clock;

CriterionResult criterion(int id, std::string name) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  return r;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

const std::array<double, 4>& gate_angles() {
  static const std::array<double, 4> a{kPi / 8, kPi / 4, 3 * kPi / 8, kPi / 2};
  return a;
}

const std::array<Vec3, 3>& gate_axes() {
  static const std::array<Vec3, 3> a{Vec3{1, 0, 0}, Vec3{0, 0, 1}, Vec3{1.0 / 3, -2.0 / 3, 2.0 / 3}};
  return a;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  LoopParams loop() { return LoopParams(uniform(0, kPi), uniform(0, 2 * kPi), uniform(0, 2 * kPi)); }
  TwoLoopPath two_loop() { return {loop(), loop()}; }
  SingleLoopPath single_loop() {
    return SingleLoopPath(uniform(0, kPi), uniform(0, 2 * kPi), uniform(0, 2 * kPi), uniform(0, 2 * kPi));
  }
  SingleShotPath single_shot() {
    return SingleShotPath(uniform(0, kPi / 2), uniform(0, 2 * kPi), uniform(0, 2 * kPi),
                          uniform(-kPi / 2, kPi / 2));
  }
  double error() { return uniform(-RabiError::kMaxMagnitude, RabiError::kMaxMagnitude); }
  Vec3 axis() {
    const double z = uniform(-1, 1);
    const double phi = uniform(0, 2 * kPi);
    const double r = std::sqrt(1 - z * z);
    return Vec3{r * std::cos(phi), r * std::sin(phi), z}.normalized();
  }

 private:
  std::mt19937_64 rng_;
};

// Two-loop path with the given geometry and decomposition phase phi_b.
TwoLoopPath with_phi_b(const TwoLoopPath& geometry, double phi_b) {
  const BrightDark bd1 = bright_dark(geometry.loop1.theta(), geometry.loop1.psi());
  const BrightDark bd2 = bright_dark(geometry.loop2.theta(), geometry.loop2.psi());
  const double phi2 = geometry.loop1.phi() + phi_b - std::arg(inner(bd1.bright, bd2.bright));
  return {geometry.loop1, LoopParams(geometry.loop2.theta(), geometry.loop2.psi(), phi2)};
}

double kappa_slope(const TwoLoopPath& path, double epsilon) {
  const double up = exact_fidelity_two_loop(path, RabiError(epsilon, kKappaStep));
  const double down = exact_fidelity_two_loop(path, RabiError(epsilon, -kKappaStep));
  return (up - down) / (2 * kKappaStep);
}

CriterionResult figure1_criterion(const AcceptanceOptions& opt) {
  CriterionResult r = criterion(1, "figure1 dominance, monotonicity and endpoints");
  const auto t0 = Clock::now();
  const auto rows = parse_figure1_csv(figure1_csv(figure1_curves(101, opt.functions)));

  double dominance = std::numeric_limits<double>::infinity();
  double monotone = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].theta > 0) {
      dominance = std::min({dominance, rows[i].f2 - rows[i].f1, rows[i].f3 - rows[i].f1});
    }
    if (i > 0) {
      monotone = std::min({monotone, rows[i].f1 - rows[i - 1].f1, rows[i].f2 - rows[i - 1].f2,
                           rows[i].f3 - rows[i - 1].f3});
    }
  }
  const Figure1Row& end = rows.back();
  const double endpoint = std::max({std::abs(end.f1 - (2 - std::sqrt(2.0))), std::abs(end.f2 - 1),
                                    std::abs(end.f3 - 1), std::abs(end.theta - kPi / 2)});
  r.seconds = seconds_since(t0);
  r.measured = dominance;
  r.relation = ">";
  r.required = 0;
  r.passed = dominance > 0 && monotone > 0 && endpoint <= kFigureEndpointTol && r.seconds < kFigureSeconds;
  r.detail = "min(f2-f1, f3-f1)=" + fmt(dominance) + " min step increase=" + fmt(monotone) +
             " endpoint err=" + fmt(endpoint) + " (<= " + fmt(kFigureEndpointTol) + ") rows=" +
             std::to_string(rows.size());
  return r;
}

CriterionResult two_loop_coefficient_criterion(const AcceptanceOptions& opt) {
  CriterionResult r = criterion(2, "second-order coefficient, two-loop (phi_b = pi)");
  const auto t0 = Clock::now();
  const auto eps = default_extraction_epsilons();
  double worst = 0;
  std::string at;
  for (double vartheta : gate_angles()) {
    for (const Vec3& axis : gate_axes()) {
      const TwoLoopPath path = solve_two_loop(TargetGate(vartheta, axis)).path;
      const double c =
          quadratic_coefficient_of([&](double e) { return exact_fidelity_two_loop(path, RabiError(e)); }, eps)
              .coefficient;
      const double expected = opt.functions.f1(vartheta) * kPi2 / 3;
      const double rel = std::abs(c - expected) / expected;
      if (rel >= worst) {
        worst = rel;
        at = "theta=" + fmt(vartheta) + " exact=" + fmt(c) + " f1*pi^2/3=" + fmt(expected);
      }
    }
  }
  r.seconds = seconds_since(t0);
  r.measured = worst;
  r.relation = "<=";
  r.required = kCoefficientRelTol;
  r.passed = worst <= kCoefficientRelTol && r.seconds < kCoefficientSeconds;
  r.detail = "worst relative error at " + at;
  return r;
}

CriterionResult other_schemes_coefficient_criterion(const AcceptanceOptions& opt) {
  CriterionResult r = criterion(3, "second-order coefficient, single-loop and single-shot");
  const auto t0 = Clock::now();
  const auto eps = default_extraction_epsilons();
  double worst_loop = 0;
  double worst_shot = 0;
  for (double vartheta : gate_angles()) {
    for (const Vec3& axis : gate_axes()) {
      const TargetGate target(vartheta, axis);
      const SingleLoopPath loop = solve_single_loop(target);
      const SingleShotPath shot = solve_single_shot(target);
      const double c_loop =
          quadratic_coefficient_of([&](double e) { return exact_fidelity_single_loop(loop, e); }, eps).coefficient;
      const double c_shot =
          quadratic_coefficient_of([&](double e) { return exact_fidelity_single_shot(shot, e); }, eps).coefficient;
      const double e_loop = opt.functions.f2(vartheta) * kPi2 / 3;
      const double e_shot = opt.functions.f3(vartheta) * kPi2 / 3;
      worst_loop = std::max(worst_loop, std::abs(c_loop - e_loop) / e_loop);
      worst_shot = std::max(worst_shot, std::abs(c_shot - e_shot) / e_shot);
    }
  }
  r.seconds = seconds_since(t0);
  r.measured = std::max(worst_loop, worst_shot);
  r.relation = "<=";
  r.required = kCoefficientRelTol;
  r.passed = r.measured <= kCoefficientRelTol;
  r.detail = "single-loop vs f2: " + fmt(worst_loop) + ", single-shot vs f3: " + fmt(worst_shot);
  return r;
}

CriterionResult phi_b_criterion(const AcceptanceOptions& opt) {
  CriterionResult r = criterion(4, "phi_b optimality scan and phi_b = 0 counter-check");
  const auto t0 = Clock::now();
  const double vartheta = kPi / 4;
  const TwoLoopPath geometry = solve_two_loop(TargetGate(vartheta, gate_axes()[2])).path;
  const double step = 2 * kPi / kPhiScanPoints;

  int best_k = 0;
  double best_infidelity = std::numeric_limits<double>::infinity();
  for (int k = 0; k < kPhiScanPoints; ++k) {
    const TwoLoopPath path = with_phi_b(geometry, k * step);
    const double infidelity = 1 - exact_fidelity_two_loop(path, RabiError(kScanEpsilon));
    if (infidelity < best_infidelity) {
      best_infidelity = infidelity;
      best_k = k;
    }
  }
  const double offset = angle_distance(best_k * step, kPi);

  const TwoLoopPath zero_path = with_phi_b(geometry, 0.0);
  const double c_zero =
      quadratic_coefficient_of([&](double e) { return exact_fidelity_two_loop(zero_path, RabiError(e)); },
                               default_extraction_epsilons())
          .coefficient;
  const double c_loop = opt.functions.f2(vartheta) * kPi2 / 3;
  const double c_shot = opt.functions.f3(vartheta) * kPi2 / 3;
  const double margin = c_zero - std::max(c_loop, c_shot);

  r.seconds = seconds_since(t0);
  r.measured = offset;
  r.relation = "<=";
  r.required = step;
  r.passed = offset <= step * (1 + 1e-12) && margin > 0;
  r.detail = "argmin phi_b=" + fmt(best_k * step) + " coefficient(phi_b=0)=" + fmt(c_zero) +
             " vs single-loop " + fmt(c_loop) + ", single-shot " + fmt(c_shot);
  return r;
}

CriterionResult relative_error_criterion(const AcceptanceOptions& opt) {
  CriterionResult r = criterion(5, "relative-error fidelity vs exact propagation");
  const auto t0 = Clock::now();
  Sampler s(opt.seed + 5);
  double worst_ratio = 0;
  double worst_reduction = 0;
  for (int i = 0; i < kRelativeGridPoints; ++i) {
    const TwoLoopPath path = s.two_loop();
    const double eps = s.error();
    const double kappa = s.error();
    const RabiError error(eps, kappa);
    const double exact = gate_fidelity(two_loop_ideal(path), two_loop_errored_relative(path, error));
    const double approx = fid2_relative(path, error).fidelity;
    const double scale = std::pow(std::abs(eps) + std::abs(kappa), 3);
    worst_ratio = std::max(worst_ratio, std::abs(exact - approx) / scale);

    const BrightDecomposition dec = phi_b_of(path);
    const double common = fid2_relative(path, RabiError(eps)).fidelity;
    const double reference = fid2_two_loop(dec.eta, dec.phi_b.value_or(0.0), eps);
    worst_reduction = std::max(worst_reduction, std::abs(common - reference));
  }
  r.seconds = seconds_since(t0);
  r.measured = worst_ratio;
  r.relation = "<=";
  r.required = kCubicConstant;
  r.passed = worst_ratio <= kCubicConstant && worst_reduction <= kReductionTol;
  r.detail = "max |F_exact - F''| / (|eps|+|kappa|)^3 over " + std::to_string(kRelativeGridPoints) +
             " points; kappa=0 reduction err=" + fmt(worst_reduction) + " (<= " + fmt(kReductionTol) + ")";
  return r;
}

CriterionResult kappa_criterion(const AcceptanceOptions&) {
  CriterionResult r = criterion(6, "kappa optimality of balanced paths");
  const auto t0 = Clock::now();
  double worst_balanced = 0;
  for (double vartheta : gate_angles()) {
    for (const Vec3& axis : gate_axes()) {
      for (int sign : {+1, -1}) {
        PathConstraints c;
        c.orientation_sign = sign;
        const TwoLoopPath path = solve_two_loop(TargetGate(vartheta, axis), c).path;
        worst_balanced = std::max(worst_balanced, std::abs(kappa_slope(path, kScanEpsilon)));
      }
    }
  }
  const TwoLoopPath fixture =
      with_phi_b(TwoLoopPath{LoopParams(kPi / 3, 0, 0), LoopParams(kPi / 2, kPi / 2, 0)}, kPi);
  const double slope = kappa_slope(fixture, kScanEpsilon);
  const double gap = std::abs(slope - kUnbalancedSlope);

  r.seconds = seconds_since(t0);
  r.measured = worst_balanced;
  r.relation = "<=";
  r.required = kBalancedSlopeTol;
  r.passed = worst_balanced <= kBalancedSlopeTol && gap <= kUnbalancedSlopeTol;
  r.detail = "unbalanced fixture slope=" + fmt(slope) + " vs " + fmt(kUnbalancedSlope) + " (gap " + fmt(gap) +
             " <= " + fmt(kUnbalancedSlopeTol) + ")";
  return r;
}

CriterionResult oracle_criterion(const AcceptanceOptions& opt) {
  CriterionResult r = criterion(7, "time-stepped oracle vs closed-form propagators");
  const auto t0 = Clock::now();
  const int points = opt.level == VerifyLevel::kFull ? 100 : 8;
  Sampler s(opt.seed + 7);

  std::vector<Schedule> schedules;
  std::vector<UnitaryMatrix> expected;
  auto add = [&](Schedule sched, const UnitaryMatrix& u) {
    schedules.push_back(std::move(sched));
    expected.push_back(u);
  };
  for (EnvelopeShape shape : {EnvelopeShape::kSquare, EnvelopeShape::kSineSquared}) {
    for (int i = 0; i < points; ++i) {
      const TwoLoopPath two = s.two_loop();
      const double eps = s.error();
      const double kappa = s.error();
      add(two_loop_schedule(two, RabiError(), shape), two_loop_ideal(two));
      add(two_loop_schedule(two, RabiError(eps), shape), two_loop_errored(two, RabiError(eps)));
      add(two_loop_schedule(two, RabiError(eps, kappa), shape),
          two_loop_errored_relative(two, RabiError(eps, kappa)));

      const SingleLoopPath loop = s.single_loop();
      const double eps_loop = s.error();
      add(single_loop_schedule(loop, 0, shape), single_loop_ideal(loop));
      add(single_loop_schedule(loop, eps_loop, shape), single_loop_errored(loop, RabiError(eps_loop)));

      const SingleShotPath shot = s.single_shot();
      const double eps_shot = s.error();
      add(single_shot_schedule(shot, 0, shape), single_shot_ideal(shot));
      add(single_shot_schedule(shot, eps_shot, shape), single_shot_errored(shot, RabiError(eps_shot)));
    }
  }
  const auto results = propagate_batch(schedules, kOracleSteps);
  double worst = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    worst = std::max(worst, max_abs_diff(results[i].unitary.matrix(), expected[i].matrix()));
  }
  r.seconds = seconds_since(t0);
  r.measured = worst;
  r.relation = "<=";
  r.required = kOracleTol;
  r.passed = worst <= kOracleTol && r.seconds < kOracleSeconds;
  r.detail = std::to_string(points) + " points/scheme, " + std::to_string(results.size()) +
             " propagations at " + std::to_string(kOracleSteps) + " steps, kernel " +
             std::string(kernels::backend_name(kernels::best_backend()));
  return r;
}

CriterionResult structural_criterion(const AcceptanceOptions& opt) {
  CriterionResult r = criterion(8, "structural suite (unitarity, zero-error, gauge, round trips)");
  const auto t0 = Clock::now();
  Sampler s(opt.seed + 8);
  double unitarity = 0, zero_error = 0, gauge = 0, round_trip = 0;
  auto unit = [&](const UnitaryMatrix& u) { unitarity = std::max(unitarity, unitarity_defect(u.matrix())); };

  for (int i = 0; i < 1000; ++i) {
    const TwoLoopPath two = s.two_loop();
    const SingleLoopPath loop = s.single_loop();
    const SingleShotPath shot = s.single_shot();
    const double eps = s.error();
    const RabiError common(eps);
    const RabiError relative(eps, s.error());

    unit(two_loop_ideal(two));
    unit(two_loop_errored(two, common));
    unit(two_loop_errored_relative(two, relative));
    unit(two_loop_errored_relative_factored(two, relative));
    unit(single_loop_ideal(loop));
    unit(single_loop_errored(loop, common));
    unit(single_shot_ideal(shot));
    unit(single_shot_errored(shot, common));

    zero_error = std::max({zero_error, max_abs_diff(two_loop_errored(two, {}).matrix(), two_loop_ideal(two).matrix()),
                           max_abs_diff(two_loop_errored_relative(two, {}).matrix(), two_loop_ideal(two).matrix()),
                           max_abs_diff(single_loop_errored(loop, {}).matrix(), single_loop_ideal(loop).matrix()),
                           max_abs_diff(single_shot_errored(shot, {}).matrix(), single_shot_ideal(shot).matrix())});

    const double shift = s.uniform(0, 2 * kPi);
    const TwoLoopPath rephased{LoopParams(two.loop1.theta(), two.loop1.psi(), s.uniform(0, 2 * kPi)),
                               LoopParams(two.loop2.theta(), two.loop2.psi(), s.uniform(0, 2 * kPi))};
    const TwoLoopPath shifted{LoopParams(two.loop1.theta(), two.loop1.psi(), two.loop1.phi() + shift),
                              LoopParams(two.loop2.theta(), two.loop2.psi(), two.loop2.phi() + shift)};
    const SingleLoopPath loop_shifted(loop.theta(), loop.psi(), loop.phi() + shift, loop.phi_prime() + shift);
    gauge = std::max({gauge, max_abs_diff(two_loop_ideal(rephased).matrix(), two_loop_ideal(two).matrix()),
                      std::abs(exact_fidelity_two_loop(shifted, common) - exact_fidelity_two_loop(two, common)),
                      std::abs(exact_fidelity_single_loop(loop_shifted, eps) - exact_fidelity_single_loop(loop, eps))});

    const TargetGate target(s.uniform(0.01, kPi / 2), s.axis());
    auto check = [&](const UnitaryMatrix& u) {
      const MeasuredGate g = measure_gate(u);
      round_trip = std::max({round_trip, std::abs(g.theta_gate - target.theta_gate()),
                             angle_between(g.axis, target.axis())});
    };
    check(two_loop_ideal(solve_two_loop(target).path));
    check(single_loop_ideal(solve_single_loop(target)));
    check(single_shot_ideal(solve_single_shot(target)));
  }
  r.seconds = seconds_since(t0);
  const double ratio = std::max({unitarity / kUnitarityTol, zero_error / kZeroErrorTol, gauge / kGaugeTol,
                                 round_trip / kRoundTripTol});
  r.measured = ratio;
  r.relation = "<=";
  r.required = 1;
  r.passed = ratio <= 1;
  r.detail = "unitarity=" + fmt(unitarity) + " zero-error=" + fmt(zero_error) + " gauge=" + fmt(gauge) +
             " round-trip=" + fmt(round_trip) + " (worst ratio to tolerance)";
  return r;
}

}  // namespace

bool AcceptanceReport::all_passed() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.passed; });
}

AcceptanceReport run_acceptance(const AcceptanceOptions& options) {
  AcceptanceReport report;
  report.seed = options.seed;
  report.level = options.level;
  using Fn = CriterionResult (*)(const AcceptanceOptions&);
  for (Fn fn : {figure1_criterion, two_loop_coefficient_criterion, other_schemes_coefficient_criterion,
                phi_b_criterion, relative_error_criterion, kappa_criterion, oracle_criterion,
                structural_criterion}) {
    try {
      report.criteria.push_back(fn(options));
    } catch (const std::exception& e) {
      CriterionResult failed = criterion(static_cast<int>(report.criteria.size()) + 1, "criterion raised an exception");
      failed.detail = e.what();
      report.criteria.push_back(failed);
    }
  }
  return report;
}

void print_report(std::ostream& os, const AcceptanceReport& report) {
  os << "acceptance suite: level=" << (report.level == VerifyLevel::kFull ? "full" : "fast")
     << " seed=" << report.seed << '\n';
  int failed = 0;
  for (const auto& c : report.criteria) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << ": measured " << fmt(c.measured) << ' '
       << c.relation << ' ' << fmt(c.required) << "; " << c.detail << " [" << std::fixed << std::setprecision(2)
       << c.seconds << " s]" << std::defaultfloat << '\n';
    if (!c.passed) ++failed;
  }
  os << (failed == 0 ? "all " + std::to_string(report.criteria.size()) + " criteria passed"
                     : std::to_string(failed) + " criteria failed")
     << '\n';
}

}  // namespace holo
