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

// NOT, square root of NOT and CNOT as exact maps on Bloch coordinates. The
// unitaries are kept alongside as conjugation oracles.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "fuzzybit/fuzzylogic.hpp"
#include "fuzzybit/linalg.hpp"
#include "fuzzybit/qubit.hpp"
#include "fuzzybit/twoqubit.hpp"

namespace fuzzybit {

enum class GateName { Not, SqrtNot, Cnot };

std::string_view to_string(GateName g);
/// `not`, `sqrt-not` or `cnot`.
GateName parse_gate_name(std::string_view text);

struct GateSpec {
  GateName name;
  /// sigma_1; 1/2 [[1+i, 1-i], [1-i, 1+i]]; diag-block(I, sigma_1) with the
  /// first qubit as control.
  ComplexMatrix unitary;
  System system() const { return name == GateName::Cnot ? System::TwoQubit : System::Qubit; }
};

const GateSpec& gate_spec(GateName g);

/// (r1, r2, r3) -> (r1, -r2, -r3).
QubitState apply_not(const QubitState& s);
/// (r1, r2, r3) -> (r1, -r3, r2): the quarter turn about x1 that the printed
/// unitary performs under U rho U^dagger.
QubitState apply_sqrt_not(const QubitState& s);
/// r' = (r01, r32, r33), s' = (r11, r21, r30),
/// R' = [[r10, r23, -r22], [r20, -r13, r12], [r31, r02, r03]].
BlochMatrix apply_cnot(const BlochMatrix& bm);

/// Applies the coordinate map of `g`; DomainError if the state's system differs.
State apply_gate(GateName g, const State& s);
/// U rho U^dagger through the density matrix.
State apply_gate_oracle(GateName g, const State& s);

/// Rotation by theta about x1, the continuous family through identity (0),
/// square root of NOT (pi/2) and NOT (pi).
QubitState x_rotation(const QubitState& s, double theta);
/// exp(-i theta sigma_1 / 2).
ComplexMatrix x_rotation_unitary(double theta);

/// f evaluated at the gate-transformed state.
double membership_after_gate(GateName g, const Functional& f, const State& s);

/// Does f_a(NOT rho) = 1 - f_a(rho) hold on the universe? For a unit axis it
/// does exactly when a1 = 0.
struct NotComplementResult {
  bool equal = false;
  double max_gap = 0.0;
  std::optional<State> witness;
  bool analytic_equal = false;
};

NotComplementResult not_vs_complement(const Vector3& ahat, const StateUniverse& u,
                                      const Tolerances& tol = kTolerances);

/// Memberships f^{eA eB} with a = b = z before and after CNOT, indexed
/// ++, +-, -+, --.
struct CnotTable {
  std::array<double, 4> before{};
  std::array<double, 4> after{};
  /// after == before permuted by (++, +-, --, -+), compared exactly.
  bool permutation_exact() const;
};

CnotTable cnot_membership_table(const BlochMatrix& bm);

struct ContinuityRow {
  double theta;
  double membership;
};

/// f_a(x_rotation(s, theta)) on `points` angles spread over [0, pi].
std::vector<ContinuityRow> continuity_table(const Vector3& ahat, const QubitState& s, int points);

}  // namespace fuzzybit
