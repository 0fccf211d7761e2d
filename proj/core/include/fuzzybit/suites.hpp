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

// Named verification suites behind `fuzzybit verify`. Each returns a report
// whose FAIL lines decide the exit status.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "fuzzybit/fuzzylogic.hpp"
#include "fuzzybit/report.hpp"
#include "fuzzybit/sampling.hpp"
#include "fuzzybit/tolerances.hpp"

namespace fuzzybit {

struct SuiteOptions {
  System system = System::Qubit;
  std::size_t samples = 1000;
  std::uint64_t seed = kDefaultSeed;
  Tolerances tol{};
};

/// oracle, orthogonality, pykacz, laws, lattice, positivity, cartan, qutrit,
/// gates and all.
const std::vector<std::string_view>& suite_names();

/// ParseError for an unknown suite name.
Report run_suite(std::string_view name, const SuiteOptions& options);

Report oracle_suite(const SuiteOptions& o);
Report orthogonality_suite(const SuiteOptions& o);
Report pykacz_suite(const SuiteOptions& o);
Report laws_suite(const SuiteOptions& o);
Report lattice_suite(const SuiteOptions& o);
Report positivity_suite(const SuiteOptions& o);
Report cartan_suite(const SuiteOptions& o);
Report qutrit_suite(const SuiteOptions& o);
Report gates_suite(const SuiteOptions& o);

}  // namespace fuzzybit
