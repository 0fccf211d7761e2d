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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fuzzybit {

enum class Status { Pass, Fail, Info };

/// One line of a verification report. `margin` is the worst observed value of
/// the quantity the check bounds (a residual, a slack or a count); `witness`
/// describes the state or objects that realize it, when one exists. Info lines
/// carry data and never affect the outcome.
struct Check {
  std::string name;
  Status status = Status::Fail;
  double margin = 0.0;
  std::string witness;

  bool passed() const noexcept { return status != Status::Fail; }
};

Check make_check(std::string name, bool pass, double margin, std::string witness = {});
Check make_info(std::string name, double margin, std::string witness = {});

class Report {
 public:
  void add(Check c) { checks_.push_back(std::move(c)); }
  /// Appends every check of `other`, prefixing names with `prefix`.
  void append(const Report& other, std::string_view prefix = {});

  const std::vector<Check>& checks() const noexcept { return checks_; }
  bool all_pass() const;
  /// nullptr if no check has that name.
  const Check* find(std::string_view name) const;

  /// One line per check: `NAME PASS|FAIL|INFO margin=... witness=...`.
  std::string to_text(int significant_digits = 15) const;

 private:
  std::vector<Check> checks_;
};

/// %.{digits}g with negative zero printed as 0.
std::string format_number(double v, int significant_digits = 15);

std::string_view to_string(Status s);

}  // namespace fuzzybit
