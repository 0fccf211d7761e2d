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

// Two qubits in Bloch-matrix form:
//
//   rho = 1/4 r_{mu nu} sigma_mu (x) sigma_nu,   [r] = | 1  r^T |
//                                                     | s  R   |
//
// with r_{mu nu} = tr(rho sigma_mu (x) sigma_nu). Under this normalization s
// and r lie in the unit ball and the marginal qubit Bloch vectors (radius 1/2
// convention of QubitState) are s/2 and r/2.

#include <Eigen/Dense>

#include "fuzzybit/borel.hpp"
#include "fuzzybit/linalg.hpp"
#include "fuzzybit/qubit.hpp"
#include "fuzzybit/report.hpp"
#include "fuzzybit/tolerances.hpp"

namespace fuzzybit {

class BlochMatrix {
 public:
  /// Validates positivity of the reconstructed density matrix and the norm
  /// bounds on s, r, R; DomainError otherwise.
  static BlochMatrix from_blocks(const Vector3& s, const Vector3& r, const Matrix3& R,
                                 const Tolerances& tol = kTolerances);
  /// Full 4x4 array [r_{mu nu}]; r_00 must be 1 within tol.density_trace.
  static BlochMatrix from_array(const Eigen::Matrix4d& array, const Tolerances& tol = kTolerances);
  /// r_{mu nu} = tr(rho sigma_mu (x) sigma_nu). rho must be hermitian, unit
  /// trace and non-negative within tolerance.
  static BlochMatrix from_density(const ComplexMatrix& rho, const Tolerances& tol = kTolerances);
  static BlochMatrix maximally_mixed();

  /// First-qubit local vector (r_{i0}).
  const Vector3& s() const noexcept { return s_; }
  /// Second-qubit local vector (r_{0j}).
  const Vector3& r() const noexcept { return r_; }
  /// Correlation matrix R_ij = r_{ij}.
  const Matrix3& correlation() const noexcept { return R_; }

  /// r_{mu nu}, mu, nu in 0..3.
  double operator()(int mu, int nu) const;
  Eigen::Matrix4d array() const;
  ComplexMatrix density_matrix() const;

 private:
  BlochMatrix(const Vector3& s, const Vector3& r, const Matrix3& R) : s_(s), r_(r), R_(R) {}
  Vector3 s_;
  Vector3 r_;
  Matrix3 R_;
};

/// Marginal qubit state of `which` (s/2 for the first factor, r/2 for the second).
QubitState trace_out(const BlochMatrix& bm, Subsystem which);

/// C = A (x) B with the decomposition fixed by the caller.
struct FactorObservable {
  Observable2 a;
  Observable2 b;
  ComplexMatrix matrix() const;
};

/// f^{eA,eB}(rho) = tr((P_A (x) P_B) rho) in closed form:
///   types 1-3 -> 0; type 4 -> 1/4 (1 + eA s.a + eB r.b + eA eB a^T R b);
///   type 5 -> 1/2 (1 + eA s.a) or 1/2 (1 + eB r.b); type 6 -> 1.
double membership_two(const Vector3& ahat, const Vector3& bhat, const BlochMatrix& bm,
                      QubitClass a, QubitClass b, const Tolerances& tol = kTolerances);

/// Convenience: classifies each factor observable against its Borel set.
double membership_two(const FactorObservable& c, const BorelSet& ea, const BorelSet& eb,
                      const BlochMatrix& bm, const Tolerances& tol = kTolerances);

/// P_A (x) P_B from the closed-form factor projectors.
Projector factor_projector(const Vector3& ahat, const Vector3& bhat, QubitClass a, QubitClass b,
                           const Tolerances& tol = kTolerances);

/// |psi> = sum lambda_ij |i>|j>, i indexing the first qubit.
class PureTwoQubit {
 public:
  static PureTwoQubit from_amplitudes(const Eigen::Matrix2cd& lambda,
                                      const Tolerances& tol = kTolerances);

  const Eigen::Matrix2cd& amplitudes() const noexcept { return lambda_; }
  /// Components in the order |00>, |01>, |10>, |11>.
  ComplexVector state_vector() const;
  ComplexMatrix density_matrix() const;

 private:
  explicit PureTwoQubit(const Eigen::Matrix2cd& lambda) : lambda_(lambda) {}
  Eigen::Matrix2cd lambda_;
};

/// lambda_vec = (2 Re(l1* l2), 2 Im(l1* l2), |l1|^2 - |l2|^2) with
/// l1 = lambda_11, l2 = lambda_12: the unnormalized Bloch vector of the second
/// qubit conditioned on the first being |0>.
Vector3 lambda_vector(const PureTwoQubit& psi);

/// <psi| P_z^+ (x) P_b^+ |psi> = 1/2 (|l1|^2 + |l2|^2 + b.lambda_vec) in the frame
/// where the first axis is z.
double membership_pure_two(const PureTwoQubit& psi, const Vector3& bhat,
                           const Tolerances& tol = kTolerances);

/// Every norm inequality the Bloch matrix of a state must satisfy. Margins
/// are bound - value (non-negative when satisfied).
Report inequality_suite(const BlochMatrix& bm, const Tolerances& tol = kTolerances);

/// s = r = 0 within tol.bloch_bounds.
bool locally_maximally_mixed(const BlochMatrix& bm, const Tolerances& tol = kTolerances);

}  // namespace fuzzybit
