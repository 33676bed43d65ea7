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

#include "holopath/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "holo/schemes.hpp"

namespace holopath {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view why) {
  std::ostringstream os;
  os << "invalid value '" << value << "' for " << key << ": " << why;
  throw UsageError(os.str());
}

double parse_double(std::string_view key, std::string_view text) {
  const std::string_view t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
    bad_value(key, text, "expected a finite number");
  }
  return v;
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view text) {
  const std::string_view t = trim(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    bad_value(key, text, "expected a non-negative integer");
  }
  return v;
}

std::vector<double> parse_doubles(std::string_view key, std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_double(key, text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<double> parse_errors(std::string_view key, std::string_view text) {
  auto values = parse_doubles(key, text);
  for (double v : values) {
    if (std::abs(v) > holo::RabiError::kMaxMagnitude) bad_value(key, text, "each entry must satisfy |x| <= 0.1");
  }
  return values;
}

bool parse_bool(std::string_view key, std::string_view text) {
  const std::string_view t = trim(text);
  if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return false;
  bad_value(key, text, "expected true or false");
}

}  // namespace

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::kTwoLoop:
      return "two-loop";
    case Scheme::kSingleLoop:
      return "single-loop";
    case Scheme::kSingleShot:
      return "single-shot";
  }
  return "unknown";
}

Scheme parse_scheme(std::string_view text) {
  const std::string_view t = trim(text);
  for (Scheme s : {Scheme::kTwoLoop, Scheme::kSingleLoop, Scheme::kSingleShot}) {
    if (t == scheme_name(s)) return s;
  }
  bad_value("scheme", text, "expected two-loop, single-loop or single-shot");
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{"samples", "out",     "scheme", "theta-gate", "axis",  "phi-b",
                                             "balanced", "epsilon", "kappa",  "seed",       "level", "params"};
  return keys;
}

std::vector<double> parse_list(std::string_view text) { return parse_doubles("list", text); }

void set_key(RunConfig& config, std::string_view key, std::string_view value) {
  if (key == "samples") {
    const std::uint64_t n = parse_unsigned(key, value);
    if (n < 2 || n > 10'000'000) bad_value(key, value, "must lie in [2, 10^7]");
    config.samples = static_cast<std::size_t>(n);
  } else if (key == "out") {
    config.out = std::string(trim(value));
  } else if (key == "scheme") {
    config.scheme = parse_scheme(value);
  } else if (key == "theta-gate") {
    const double t = parse_double(key, value);
    if (t < 0.0 || t > 0.5) bad_value(key, value, "must lie in [0, 0.5] (units of pi)");
    config.theta_gate = t;
  } else if (key == "axis") {
    const auto v = parse_doubles(key, value);
    if (v.size() != 3) bad_value(key, value, "expected x,y,z");
    const holo::Vec3 a{v[0], v[1], v[2]};
    if (a.norm() == 0.0) bad_value(key, value, "axis must be nonzero");
    config.axis = a.normalized();
  } else if (key == "phi-b") {
    const std::string_view t = trim(value);
    if (t == "free") {
      config.phi_b.reset();
    } else {
      config.phi_b = parse_double(key, value);
    }
  } else if (key == "balanced") {
    config.balanced = parse_bool(key, value);
  } else if (key == "epsilon") {
    config.epsilon = parse_errors(key, value);
  } else if (key == "kappa") {
    config.kappa = parse_errors(key, value);
  } else if (key == "seed") {
    config.seed = parse_unsigned(key, value);
  } else if (key == "level") {
    const std::string_view t = trim(value);
    if (t == "fast") {
      config.level = holo::VerifyLevel::kFast;
    } else if (t == "full") {
      config.level = holo::VerifyLevel::kFull;
    } else {
      bad_value(key, value, "expected fast or full");
    }
  } else if (key == "params") {
    config.params = parse_doubles(key, value);
  } else {
    throw UsageError("unknown key '" + std::string(key) + "'");
  }
}

void apply_config_text(RunConfig& config, std::string_view text, std::string_view origin) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError(std::string(origin) + ":" + std::to_string(line_no) + ": expected key=value");
    }
    try {
      set_key(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const UsageError& e) {
      throw UsageError(std::string(origin) + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  apply_config_text(config, buf.str(), path);
}

}  // namespace holopath
