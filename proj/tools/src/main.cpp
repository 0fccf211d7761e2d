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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "fuzzybit/error.hpp"
#include "fuzzybit/suites.hpp"

namespace {

using namespace fuzzybit::cli;

void add_membership(CLI::App& app, MembershipArgs& m) {
  auto* cmd = app.add_subcommand("membership", "Evaluate an experimental function and its trace oracle");
  cmd->add_option("--system", m.system, "qubit or twoqubit")->check(CLI::IsMember({"qubit", "twoqubit"}));
  cmd->add_option("--a", m.a, "Unit axis of the (first) observable, x,y,z");
  cmd->add_option("--b", m.b, "Unit axis of the second observable, x,y,z");
  cmd->add_option("--observable", m.observable, "Observable a0;a1,a2,a3 (instead of --a)");
  cmd->add_option("--observable-b", m.observable_b, "Second observable a0;a1,a2,a3");
  cmd->add_option("--borel", m.borel, "Borel set for --observable, e.g. [0,1)u{5}");
  cmd->add_option("--borel-b", m.borel_b, "Borel set for --observable-b");
  cmd->add_option("--class", m.cls, "Qubit: 0 + - pm; two qubits: two of + - 0 *");
  cmd->add_option("--rho", m.rho, "Qubit Bloch vector x,y,z (|rho| <= 1/2)");
  cmd->add_option("--alpha", m.alpha, "Pure state cos(alpha)|0> + sin(alpha)|1>");
  cmd->add_option("--state", m.state, "State file (qubit: 'x y z'; two qubits: 4x4 Bloch matrix)");
  cmd->add_flag("--full-precision", m.full_precision, "Print 17 significant digits");
}

void add_curve(CLI::App& app, CurveArgs& c) {
  auto* cmd = app.add_subcommand("curve", "Emit f = 1/2 + v cos(theta) on [0, pi] as CSV");
  cmd->add_option("--rho-norm", c.rho_norm, "Bloch radius v in [0, 1/2]")->required();
  cmd->add_option("--points", c.points, "Number of rows (>= 2)");
  cmd->add_flag("--full-precision", c.full_precision, "Print 17 significant digits");
}

void add_verify(CLI::App& app, VerifyArgs& v) {
  auto* cmd = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> names(fuzzybit::suite_names().begin(), fuzzybit::suite_names().end());
  cmd->add_option("--suite", v.suite, "Suite name")->required()->check(CLI::IsMember(names));
  cmd->add_option("--system", v.system, "qubit or twoqubit")->check(CLI::IsMember({"qubit", "twoqubit"}));
  cmd->add_option("--samples", v.samples, "Number of sampled states")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", v.seed, "Sampler seed (overrides FUZZYBIT_SEED)");
  cmd->add_option("--tol", v.tolerances, "Tolerance override name=value (repeatable)");
  cmd->add_flag("--full-precision", v.full_precision, "Print 17 significant digits");
}

void add_gate(CLI::App& app, GateArgs& g) {
  auto* gate = app.add_subcommand("gate", "Quantum gates on Bloch coordinates");
  gate->require_subcommand(1);
  auto* apply = gate->add_subcommand("apply", "Apply a gate to a state file");
  apply->add_option("--gate", g.gate, "not, sqrt-not or cnot")
      ->required()
      ->check(CLI::IsMember({"not", "sqrt-not", "cnot"}));
  apply->add_option("--state", g.state, "State file")->required();
  apply->add_option("--out", g.out, "Output file (default: stdout)");
}

void add_qutrit(CLI::App& app, EvolveArgs& e, std::string& check_state) {
  auto* qutrit = app.add_subcommand("qutrit", "Nested qutrit tools");
  qutrit->require_subcommand(1);
  auto* evolve = qutrit->add_subcommand("evolve", "Apply the non-local torus action");
  evolve->add_option("--theta1", e.theta1, "theta1 = beta - alpha (radians)");
  evolve->add_option("--theta2", e.theta2, "theta2 = gamma - alpha (radians)");
  evolve->add_option("--state", e.state, "Bloch-matrix file")->required();
  evolve->add_option("--out", e.out, "Output file (default: stdout)");
  auto* check = qutrit->add_subcommand("check", "Report the qutrit conditions of a state");
  check->add_option("--state", check_state, "Bloch-matrix file")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuzzybit: fuzzy-set representation of qubit and two-qubit quantum logic"};
  app.require_subcommand(1);
  MembershipArgs membership;
  CurveArgs curve;
  VerifyArgs verify;
  GateArgs gate;
  EvolveArgs evolve;
  std::string check_state;
  add_membership(app, membership);
  add_curve(app, curve);
  add_verify(app, verify);
  add_gate(app, gate);
  add_qutrit(app, evolve, check_state);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand("membership")) return run_membership(membership, std::cout);
    if (app.got_subcommand("curve")) return run_curve(curve, std::cout);
    if (app.got_subcommand("verify")) return run_verify(verify, std::cout);
    if (app.got_subcommand("gate")) return run_gate_apply(gate, std::cout);
    auto* qutrit = app.get_subcommand("qutrit");
    if (qutrit->got_subcommand("evolve")) return run_qutrit_evolve(evolve, std::cout);
    return run_qutrit_check(check_state, std::cout);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
  } catch (const fuzzybit::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}
