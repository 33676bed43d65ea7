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

#include "holo/figure1.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace holo {

std::vector<Figure1Row> figure1_curves(std::size_t samples, const ComparisonFunctions& functions) {
  if (samples < 2) throw DomainError("figure1: need at least 2 samples");
  std::vector<Figure1Row> rows;
  rows.reserve(samples);
  const double last = static_cast<double>(samples - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    // The final row lands exactly on pi/2.
    const double theta = i + 1 == samples ? 0.5 * kPi : 0.5 * kPi * (static_cast<double>(i) / last);
    rows.push_back({theta, functions.f1(theta), functions.f2(theta), functions.f3(theta)});
  }
  return rows;
}

namespace {

// %.15g is locale-independent for the "C" locale, which the process never changes.
void append_number(std::string& out, double v) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof buf, "%.15g", v);
  out.append(buf, static_cast<std::size_t>(n));
}

double parse_number(std::string_view field) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw std::runtime_error("figure1 csv: bad number '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace

std::string figure1_csv(const std::vector<Figure1Row>& rows) {
  std::string out = "theta,f1,f2,f3\n";
  for (const auto& r : rows) {
    append_number(out, r.theta);
    out += ',';
    append_number(out, r.f1);
    out += ',';
    append_number(out, r.f2);
    out += ',';
    append_number(out, r.f3);
    out += '\n';
  }
  return out;
}

std::vector<Figure1Row> parse_figure1_csv(std::string_view csv) {
  std::vector<Figure1Row> rows;
  bool header = true;
  while (!csv.empty()) {
    const auto eol = csv.find('\n');
    if (eol == std::string_view::npos) throw std::runtime_error("figure1 csv: missing final newline");
    const std::string_view line = csv.substr(0, eol);
    csv.remove_prefix(eol + 1);
    if (header) {
      if (line != "theta,f1,f2,f3") throw std::runtime_error("figure1 csv: unexpected header");
      header = false;
      continue;
    }
    double v[4];
    std::string_view rest = line;
    for (int i = 0; i < 4; ++i) {
      const auto comma = rest.find(',');
      if ((i < 3) == (comma == std::string_view::npos))
        throw std::runtime_error("figure1 csv: expected 4 fields");
      v[i] = parse_number(rest.substr(0, comma));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    rows.push_back({v[0], v[1], v[2], v[3]});
  }
  if (header) throw std::runtime_error("figure1 csv: empty input");
  return rows;
}

}  // namespace holo
