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

#include "holopath/commands.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "holo/figure1.hpp"
#include "holo/pathfinder.hpp"
#include "holo/schemes.hpp"

namespace holopath {

namespace {

using nlohmann::json;
using holo::kPi;

constexpr double kPi2 = kPi * kPi;

json loop_json(const holo::LoopParams& l) { return {{"theta", l.theta()}, {"psi", l.psi()}, {"phi", l.phi()}}; }

json two_loop_json(const holo::TwoLoopPath& p) { return {{"loop1", loop_json(p.loop1)}, {"loop2", loop_json(p.loop2)}}; }

json single_loop_json(const holo::SingleLoopPath& p) {
  return {{"theta", p.theta()}, {"psi", p.psi()}, {"phi", p.phi()}, {"phi_prime", p.phi_prime()}};
}

json single_shot_json(const holo::SingleShotPath& p) {
  return {{"alpha", p.alpha()}, {"beta0", p.beta0()}, {"beta1", p.beta1()}, {"gamma", p.gamma()}};
}

json optional_angle(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

holo::TargetGate target_of(const RunConfig& c) { return holo::TargetGate(c.theta_gate * kPi, c.axis); }

holo::PathConstraints constraints_of(const RunConfig& c) {
  holo::PathConstraints pc;
  pc.force_phi_b = c.phi_b ? std::optional<double>(*c.phi_b * kPi) : std::nullopt;
  pc.force_balanced = c.balanced;
  return pc;
}

void require_param_count(const RunConfig& c, std::size_t n) {
  if (c.params.size() != n) {
    throw UsageError("--params for " + std::string(scheme_name(c.scheme)) + " needs " + std::to_string(n) +
                     " values (got " + std::to_string(c.params.size()) + ")");
  }
}

holo::TwoLoopPath two_loop_path(const RunConfig& c) {
  if (c.params.empty()) return holo::solve_two_loop(target_of(c), constraints_of(c)).path;
  require_param_count(c, 6);
  const auto& p = c.params;
  return {holo::LoopParams(p[0] * kPi, p[1] * kPi, p[2] * kPi), holo::LoopParams(p[3] * kPi, p[4] * kPi, p[5] * kPi)};
}

holo::SingleLoopPath single_loop_path(const RunConfig& c) {
  if (c.params.empty()) return holo::solve_single_loop(target_of(c));
  require_param_count(c, 4);
  const auto& p = c.params;
  return holo::SingleLoopPath(p[0] * kPi, p[1] * kPi, p[2] * kPi, p[3] * kPi);
}

holo::SingleShotPath single_shot_path(const RunConfig& c) {
  if (c.params.empty()) return holo::solve_single_shot(target_of(c));
  require_param_count(c, 4);
  const auto& p = c.params;
  return holo::SingleShotPath(p[0] * kPi, p[1] * kPi, p[2] * kPi, p[3] * kPi);
}

json sweep_record(std::string_view scheme, const json& params, double eps, double kappa,
                  const holo::FidelityReport& r) {
  return {{"scheme", scheme},
          {"params", params},
          {"epsilon", eps},
          {"kappa", kappa},
          {"fidelity_exact", r.exact},
          {"fidelity_analytic2", r.analytic2},
          {"abs_gap", std::abs(r.exact - r.analytic2)}};
}

std::string flag_help(const std::string& key) {
  static const std::map<std::string, std::string> help{
      {"samples", "number of rows, >= 2"},
      {"out", "output file (default stdout)"},
      {"scheme", "two-loop | single-loop | single-shot"},
      {"theta-gate", "rotation angle in units of pi, [0, 0.5]"},
      {"axis", "rotation axis x,y,z"},
      {"phi-b", "imposed decomposition phase in units of pi, or 'free'"},
      {"epsilon", "comma-separated mean Rabi errors, |eps| <= 0.1"},
      {"kappa", "comma-separated relative Rabi errors (two-loop only)"},
      {"params", "raw scheme parameters in units of pi, replacing the solved path"},
      {"level", "fast | full"},
      {"seed", "seed of the randomized criteria"},
  };
  return help.at(key);
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

// Flags shared with the config file, captured as text and applied after it.
struct FlagSet {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  bool balanced = true;
  CLI::Option* balanced_option = nullptr;

  void add(CLI::App* app, const std::string& key, const std::string& help) {
    options[key] = app->add_option("--" + key, values[key], help);
  }

  void apply(RunConfig& config) const {
    for (const auto& [key, opt] : options) {
      if (opt->count() > 0) set_key(config, key, values.at(key));
    }
    if (balanced_option != nullptr && balanced_option->count() > 0) config.balanced = balanced;
  }
};

}  // namespace

std::string cmd_figure1(const RunConfig& config, const holo::ComparisonFunctions& functions) {
  return holo::figure1_csv(holo::figure1_curves(config.samples, functions));
}

json cmd_sweep(const RunConfig& config) {
  const bool any_kappa = std::any_of(config.kappa.begin(), config.kappa.end(), [](double k) { return k != 0.0; });
  if (any_kappa && config.scheme != Scheme::kTwoLoop) {
    throw UsageError("nonzero --kappa is only defined for the two-loop scheme");
  }
  const std::string_view name = scheme_name(config.scheme);
  json records = json::array();
  switch (config.scheme) {
    case Scheme::kTwoLoop: {
      const holo::TwoLoopPath path = two_loop_path(config);
      const json params = two_loop_json(path);
      for (double eps : config.epsilon)
        for (double kappa : config.kappa)
          records.push_back(sweep_record(name, params, eps, kappa,
                                         holo::report_two_loop_relative(path, holo::RabiError(eps, kappa))));
      break;
    }
    case Scheme::kSingleLoop: {
      const holo::SingleLoopPath path = single_loop_path(config);
      const json params = single_loop_json(path);
      for (double eps : config.epsilon)
        for (double kappa : config.kappa)
          records.push_back(sweep_record(name, params, eps, kappa, holo::report_single_loop(path, eps)));
      break;
    }
    case Scheme::kSingleShot: {
      const holo::SingleShotPath path = single_shot_path(config);
      const json params = single_shot_json(path);
      for (double eps : config.epsilon)
        for (double kappa : config.kappa)
          records.push_back(sweep_record(name, params, eps, kappa, holo::report_single_shot(path, eps)));
      break;
    }
  }
  return records;
}

json cmd_optimize(const RunConfig& config, const holo::ComparisonFunctions& functions) {
  const holo::TargetGate target = target_of(config);
  const holo::TwoLoopSolution two = holo::solve_two_loop(target, constraints_of(config));
  const holo::BrightDecomposition dec = holo::phi_b_of(two.path);
  const holo::SingleLoopPath loop = holo::solve_single_loop(target);
  const holo::SingleShotPath shot = holo::solve_single_shot(target);
  const double vartheta = target.theta_gate();

  json two_json = two_loop_json(two.path);
  two_json["phi_b"] = optional_angle(dec.phi_b);
  two_json["eta"] = dec.eta;
  two_json["cos_theta_sum"] = std::cos(two.path.loop1.theta()) + std::cos(two.path.loop2.theta());
  two_json["coefficient"] = holo::report_two_loop(two.path, 0.0).quad_coeff_analytic;

  json loop_out = single_loop_json(loop);
  loop_out["phase_difference"] = holo::single_loop_phase_difference(vartheta);
  json shot_out = single_shot_json(shot);
  shot_out["drive"] = {{"detuning", shot.drive(1.0).detuning},
                       {"omega0", shot.drive(1.0).omega0},
                       {"omega1", shot.drive(1.0).omega1}};

  json doc = {
      {"target",
       {{"theta_gate", vartheta},
        {"theta_gate_units_of_pi", config.theta_gate},
        {"axis", {target.axis().x, target.axis().y, target.axis().z}}}},
      {"constraints",
       {{"balanced", config.balanced},
        {"phi_b", config.phi_b ? json(*config.phi_b * kPi) : json(nullptr)}}},
      {"two_loop", two_json},
      {"single_loop", loop_out},
      {"single_shot", shot_out},
      {"coefficients",
       {{"two_loop", functions.f1(vartheta) * kPi2 / 3.0},
        {"single_loop", functions.f2(vartheta) * kPi2 / 3.0},
        {"single_shot", functions.f3(vartheta) * kPi2 / 3.0}}},
  };
  if (two.degenerate) {
    doc["note"] = "theta_gate = 0: the target is the identity, the axis is arbitrary and both loops coincide";
  }
  return doc;
}

holo::AcceptanceReport cmd_verify(const RunConfig& config, const holo::ComparisonFunctions& functions) {
  holo::AcceptanceOptions options;
  options.level = config.level;
  options.seed = config.seed;
  options.functions = functions;
  return holo::run_acceptance(options);
}

void write_output(const std::string& path, const std::string& content, std::ostream& fallback) {
  if (path.empty()) {
    fallback << content;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << content;
  f.close();
  if (!f) throw IoError("failed writing '" + path + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const holo::ComparisonFunctions& functions) {
  CLI::App app{"Holonomic gate robustness against Rabi-frequency errors", "holopath"};
  app.require_subcommand(1);

  std::string config_path;
  std::map<std::string, FlagSet> flags;
  auto subcommand = [&](const std::string& name, const std::string& help, std::vector<std::string> keys) {
    CLI::App* sub = app.add_subcommand(name, help);
    FlagSet& fs = flags[name];
    for (const auto& key : keys) fs.add(sub, key, flag_help(key));
    sub->add_option("--config", config_path, "key=value file applied before the flags");
    return sub;
  };

  CLI::App* figure1 = subcommand("figure1", "Write the error-function curves as CSV", {"samples", "out"});
  CLI::App* sweep = subcommand("sweep", "Exact vs second-order fidelity over error grids",
                               {"out", "scheme", "theta-gate", "axis", "phi-b", "epsilon", "kappa", "params"});
  CLI::App* optimize =
      subcommand("optimize", "Solve the optimal paths for a target gate", {"out", "theta-gate", "axis", "phi-b"});
  CLI::App* verify = subcommand("verify", "Run the acceptance suite", {"level", "seed"});
  for (CLI::App* sub : {sweep, optimize}) {
    FlagSet& fs = flags[sub->get_name()];
    fs.balanced_option = sub->add_flag("--balanced,!--no-balanced", fs.balanced, "impose cos(theta1)+cos(theta2)=0");
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "holopath: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    CLI::App* chosen = app.get_subcommands().front();
    RunConfig config;
    if (!config_path.empty()) apply_config_file(config, config_path);
    flags.at(chosen->get_name()).apply(config);

    if (chosen == figure1) {
      write_output(config.out, cmd_figure1(config, functions), out);
    } else if (chosen == sweep) {
      write_output(config.out, render(cmd_sweep(config)), out);
    } else if (chosen == optimize) {
      write_output(config.out, render(cmd_optimize(config, functions)), out);
    } else if (chosen == verify) {
      const holo::AcceptanceReport report = cmd_verify(config, functions);
      holo::print_report(out, report);
      return report.all_passed() ? kExitOk : kExitVerifyFailed;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "holopath: " << e.what() << "\n";
    return kExitUsage;
  } catch (const holo::ContractViolation& e) {
    err << "holopath: " << e.what() << "\n";
    return kExitUsage;
  } catch (const holo::DomainError& e) {
    err << "holopath: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "holopath: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "holopath: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace holopath
