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

// Reference computations that never touch a closed form: spectral projectors
// come from a numerical eigendecomposition and probabilities from tr(P rho).

#include "fuzzybit/borel.hpp"
#include "fuzzybit/linalg.hpp"
#include "fuzzybit/qubit.hpp"
#include "fuzzybit/twoqubit.hpp"

namespace fuzzybit {

/// Sum of v v^dagger over the eigenvectors of `a` whose eigenvalue lies in `e`.
Projector numeric_spectral_projector(const ComplexMatrix& a, const BorelSet& e,
                                     const Tolerances& tol = kTolerances);

/// A Borel set that selects `c` from the spectrum {lo, hi} of a qubit observable.
BorelSet representative_borel_set(double lo, double hi, QubitClass c);

/// tr(P_A^E rho) for A = a0 I + a . sigma.
double oracle_membership_qubit(const Observable2& a, const BorelSet& e, const ComplexMatrix& rho,
                               const Tolerances& tol = kTolerances);

/// tr((P_A^E (x) P_B^F) rho).
double oracle_membership_two(const FactorObservable& c, const BorelSet& ea, const BorelSet& eb,
                             const ComplexMatrix& rho, const Tolerances& tol = kTolerances);

}  // namespace fuzzybit
