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

#include <string_view>
#include <vector>

namespace fuzzybit {

// Every numerical threshold used by the library lives here. Library
// constructors validate against kTolerances; report-valued checks accept a
// Tolerances argument so callers (the CLI, the acceptance suite) can override.
struct Tolerances {
  // Projector / hermitian validation.
  double hermitian = 1e-12;
  double idempotent = 1e-10;
  // Eigen-decomposition residuals and unitarity.
  double eigen = 1e-10;
  // tr(P rho) imaginary residue.
  double trace_imag = 1e-12;
  // Subspace lattice: eigenvalue cut-offs for meet (at 2) and join (above 0).
  double subspace = 1e-8;
  // Degenerate eigenvalues collapse below this distance.
  double eigen_dedup = 1e-12;
  // Qubit states: |rho|^2 <= 1/4 + bloch_ball; pure iff ||rho| - 1/2| <= purity.
  double bloch_ball = 1e-12;
  double purity = 1e-10;
  // |ahat| = 1 check for separating classes.
  double unit_vector = 1e-12;
  // Two-qubit Bloch matrix invariants.
  double density_positivity = 1e-10;
  double bloch_bounds = 1e-10;
  double bloch_norm_sum = 1e-9;
  double density_trace = 1e-12;
  // Qutrit condition r = s, R = R^T and entangled-basis block.
  double qutrit = 1e-10;
  // Closed form vs trace/conjugation oracle.
  double oracle = 1e-12;
  double torus_oracle = 1e-10;
  double cartan_closure = 1e-10;
  double abelian = 1e-14;
  // Vector-field check: centered finite differences.
  double fd_step = 1e-5;
  double fd_match = 1e-8;
  // Fuzzy layer.
  double functional_equality = 1e-12;
  double weak_disjointness = 1e-12;
  // Pure-state normalization.
  double amplitude_norm = 1e-12;
  // Unitary checks on gate matrices and basis changes.
  double unitary = 1e-14;
};

inline constexpr Tolerances kTolerances{};

/// Field names accepted by set_tolerance, in declaration order.
const std::vector<std::string_view>& tolerance_names();
/// Overrides one field by name; ParseError for an unknown name, DomainError
/// for a negative or non-finite value.
void set_tolerance(Tolerances& tol, std::string_view name, double value);

}  // namespace fuzzybit
