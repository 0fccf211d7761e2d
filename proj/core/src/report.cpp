// Copyright 2026 The fuzzybit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fuzzybit/report.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace fuzzybit {

Check make_check(std::string name, bool pass, double margin, std::string witness) {
  return Check{std::move(name), pass ? Status::Pass : Status::Fail, margin, std::move(witness)};
}

Check make_info(std::string name, double margin, std::string witness) {
  return Check{std::move(name), Status::Info, margin, std::move(witness)};
}

void Report::append(const Report& other, std::string_view prefix) {
  for (Check c : other.checks_) {
    c.name.insert(0, prefix);
    checks_.push_back(std::move(c));
  }
}

bool Report::all_pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed(); });
}

const Check* Report::find(std::string_view name) const {
  const auto it = std::find_if(checks_.begin(), checks_.end(),
                               [name](const Check& c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

std::string Report::to_text(int significant_digits) const {
  std::string out;
  for (const auto& c : checks_) {
    out += fmt::format("{} {} margin={}", c.name, to_string(c.status),
                       format_number(c.margin, significant_digits));
    if (!c.witness.empty()) out += fmt::format(" witness={}", c.witness);
    out += '\n';
  }
  return out;
}

std::string format_number(double v, int significant_digits) {
  if (v == 0.0) v = 0.0;  // drops the sign of -0
  return fmt::format("{:.{}g}", v, significant_digits);
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Info: return "INFO";
  }
  return "?";
}

}  // namespace fuzzybit
