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

// Subcommand bodies, kept apart from argument parsing so they can be driven
// directly. Each returns the process exit code; library errors propagate as
// exceptions and are mapped to exit code 2 by main.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuzzybit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kSeedEnv = "FUZZYBIT_SEED";

/// Thrown for flag combinations the parser cannot reject on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MembershipArgs {
  std::string system = "qubit";
  std::optional<std::string> a, b;
  std::optional<std::string> observable, observable_b;
  std::optional<std::string> borel, borel_b;
  std::optional<std::string> rho, state;
  std::optional<double> alpha;
  std::optional<std::string> cls;
  bool full_precision = false;
};

struct CurveArgs {
  double rho_norm = 0.5;
  int points = 181;
  bool full_precision = false;
};

struct VerifyArgs {
  std::string suite;
  std::string system = "qubit";
  std::size_t samples = 1000;
  std::optional<std::string> seed;
  std::vector<std::string> tolerances;  // name=value
  bool full_precision = false;
};

struct GateArgs {
  std::string gate;
  std::string state;
  std::optional<std::string> out;
};

struct EvolveArgs {
  double theta1 = 0.0;
  double theta2 = 0.0;
  std::string state;
  std::optional<std::string> out;
};

int run_membership(const MembershipArgs& args, std::ostream& out);
int run_curve(const CurveArgs& args, std::ostream& out);
int run_verify(const VerifyArgs& args, std::ostream& out);
int run_gate_apply(const GateArgs& args, std::ostream& out);
int run_qutrit_evolve(const EvolveArgs& args, std::ostream& out);
int run_qutrit_check(const std::string& state, std::ostream& out);

/// Flag, then the environment variable, then the built-in default. Accepts
/// decimal or 0x-prefixed hexadecimal.
std::uint64_t resolve_seed(const std::optional<std::string>& flag, const char* env_value);

}  // namespace fuzzybit::cli
