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

// Single qubit in Bloch coordinates: rho = 1/2 I + rho_vec . sigma with
// |rho_vec| <= 1/2, observables A = a0 I + a . sigma, their spectral projectors
// and the experimental functions f = tr(P rho).

#include <optional>
#include <utility>
#include <vector>

#include "fuzzybit/borel.hpp"
#include "fuzzybit/linalg.hpp"
#include "fuzzybit/tolerances.hpp"

namespace fuzzybit {

class QubitState {
 public:
  /// DomainError if |rho|^2 > 1/4 + tol.bloch_ball or any entry is non-finite.
  static QubitState from_bloch(const Vector3& rho, const Tolerances& tol = kTolerances);
  /// rho_i = 1/2 tr(rho sigma_i). The matrix must be hermitian with unit trace.
  static QubitState from_density(const ComplexMatrix& rho, const Tolerances& tol = kTolerances);
  /// |psi> = psi0|0> + psi1|1>, normalized within tol.amplitude_norm.
  static QubitState from_amplitudes(Complex psi0, Complex psi1,
                                    const Tolerances& tol = kTolerances);
  /// cos(alpha)|0> + sin(alpha)|1>.
  static QubitState from_angle(double alpha);
  static QubitState maximally_mixed() { return QubitState(Vector3::Zero()); }

  const Vector3& bloch() const noexcept { return bloch_; }
  double radius() const { return bloch_.norm(); }
  bool is_pure(const Tolerances& tol = kTolerances) const;
  ComplexMatrix density_matrix() const;

 private:
  explicit QubitState(const Vector3& rho) : bloch_(rho) {}
  Vector3 bloch_;
};

/// A = a0 I + avec . sigma.
struct Observable2 {
  double a0 = 0.0;
  Vector3 avec = Vector3::Zero();

  ComplexMatrix matrix() const;
  /// avec / |avec|; DomainError when avec = 0.
  Vector3 axis() const;
};

/// (lambda_-, lambda_+) = (a0 - |a|, a0 + |a|).
std::pair<double, double> eigenvalues2(const Observable2& a);

/// Borel classification of the observable's spectrum. Degenerate spectra
/// (|a| below tol.eigen_dedup) only yield None or Both.
QubitClass classify(const Observable2& a, const BorelSet& e, const Tolerances& tol = kTolerances);

/// Closed-form projector for a unit axis: 0, I, or 1/2 (I ± ahat . sigma).
Projector axis_projector(const Vector3& ahat, QubitClass c, const Tolerances& tol = kTolerances);

/// P_A^E from the closed form of the class.
Projector spectral_projector(const Observable2& a, const BorelSet& e,
                             const Tolerances& tol = kTolerances);

/// f_ahat^class(rho): 0, 1, 1/2 + ahat.rho or 1/2 - ahat.rho. DomainError if
/// ahat is not a unit vector and the class separates the eigenvalues.
double membership_qubit(const Vector3& ahat, const QubitState& rho, QubitClass c,
                        const Tolerances& tol = kTolerances);

/// Same, starting from an observable and a Borel set.
double membership_qubit(const Observable2& a, const BorelSet& e, const QubitState& rho,
                        const Tolerances& tol = kTolerances);

/// f_z(alpha) = cos^2(alpha) for the pure state cos(alpha)|0> + sin(alpha)|1>.
double membership_pure_angle(double alpha);

/// f_a + f_b <= 1 for every state iff a = -b.
bool orthogonal_pair(const Vector3& ahat, const Vector3& bhat, const Tolerances& tol = kTolerances);

/// A pure state where f_a + f_b > 1, or nullopt when a = -b (no such state).
std::optional<QubitState> orthogonality_witness(const Vector3& ahat, const Vector3& bhat,
                                                const Tolerances& tol = kTolerances);

/// Throws DomainError unless | |v| - 1 | <= tol.unit_vector.
void require_unit(const Vector3& v, const Tolerances& tol = kTolerances);

}  // namespace fuzzybit
