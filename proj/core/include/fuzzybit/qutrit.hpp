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

// The qutrit nested in two qubits (the triplet subspace), the non-local torus
// generated by sigma_11, sigma_22, sigma_33, and the Cartan split of su(4) in
// the Bell basis.

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "fuzzybit/linalg.hpp"
#include "fuzzybit/report.hpp"
#include "fuzzybit/tolerances.hpp"
#include "fuzzybit/twoqubit.hpp"

namespace fuzzybit {

/// Rows are |00>, |q_s> = (|01>+|10>)/sqrt2, |11>, |q_a> = (|01>-|10>)/sqrt2.
const ComplexMatrix& entangled_basis_matrix();

/// A rho A^dagger: rho expressed in the entangled basis. The singlet lands in
/// the (3,3) entry.
ComplexMatrix entangled_basis_change(const ComplexMatrix& rho_std);

/// The two ways of saying "no singlet" are not the same statement. The Bloch
/// condition r = s, R = R^T is SWAP invariance, i.e. the singlet row of the
/// entangled-basis matrix is zero off the diagonal. The singlet population
/// (the (3,3) entry) is a separate constraint.
struct QutritCheck {
  double bloch_residual = 0.0;      // max(|r - s|_inf, |R - R^T|_inf)
  double coherence_residual = 0.0;  // max |rho_ntgl(3, k)|, k < 3
  double singlet_weight = 0.0;      // rho_ntgl(3, 3)
  bool bloch_condition = false;
  bool singlet_coherence_free = false;
  bool singlet_free = false;

  Report report() const;
};

QutritCheck check_qutrit(const BlochMatrix& bm, const Tolerances& tol = kTolerances);
/// The Bloch condition alone.
bool is_qutrit(const BlochMatrix& bm, const Tolerances& tol = kTolerances);

/// The six coordinates the torus moves: (r1, r2, r3, R12, R13, R23).
using TorusCoordinates = Eigen::Matrix<double, 6, 1>;

/// A two-qubit state satisfying the Bloch condition.
class QutritBloch {
 public:
  /// DomainError unless is_qutrit(bm).
  static QutritBloch from_bloch_matrix(const BlochMatrix& bm, const Tolerances& tol = kTolerances);

  const BlochMatrix& underlying() const noexcept { return bm_; }
  TorusCoordinates torus_coordinates() const;

 private:
  explicit QutritBloch(BlochMatrix bm) : bm_(std::move(bm)) {}
  BlochMatrix bm_;
};

/// Closed-form action of U(alpha, beta, gamma) with theta1 = beta - alpha and
/// theta2 = gamma - alpha:
///   r1' = r1 c12 - R23 s12,   R23' = R23 c12 + r1 s12   (angle theta1 - theta2)
///   r2' = r2 c2  - R13 s2,    R13' = R13 c2  + r2 s2
///   r3' = r3 c1  + R12 s1,    R12' = R12 c1  - r3 s1
/// diagonal of R unchanged, s' = r', R' symmetric.
QutritBloch nonlocal_transform(const QutritBloch& q, double theta1, double theta2,
                               const Tolerances& tol = kTolerances);

/// The closed form exactly as it is usually printed (sign of R12', direction of
/// the (r1, R23) rotation, cos(theta1) in r2'). Kept for comparison only; it
/// is not a valid evolution.
TorusCoordinates printed_nonlocal_transform(const TorusCoordinates& x, double theta1,
                                            double theta2);

/// exp((i/2)(alpha sigma_11 + beta sigma_22 + gamma sigma_33)) in the standard basis.
ComplexMatrix nonlocal_unitary(double alpha, double beta, double gamma);

/// Bloch matrix of U rho U^dagger, the conjugation oracle for nonlocal_transform.
BlochMatrix nonlocal_oracle(const BlochMatrix& bm, double alpha, double beta, double gamma,
                            const Tolerances& tol = kTolerances);

/// Generators of the torus at q, as tangent vectors in TorusCoordinates.
TorusCoordinates theta1_field(const TorusCoordinates& x);
TorusCoordinates theta2_field(const TorusCoordinates& x);
TorusCoordinates printed_theta1_field(const TorusCoordinates& x);
TorusCoordinates printed_theta2_field(const TorusCoordinates& x);

/// Compares both generators with centered finite differences of
/// nonlocal_transform. The printed generators are reported as INFO lines
/// listing every term that disagrees.
Report vector_field_check(const QutritBloch& q, const Tolerances& tol = kTolerances);

/// Bell-basis change B.
const ComplexMatrix& bell_change_matrix();
/// tau_{mu nu} = B ((i/2) sigma_mu (x) sigma_nu) B^dagger; (mu, nu) != (0, 0).
ComplexMatrix tau(int mu, int nu);

struct CartanSplit {
  std::vector<ComplexMatrix> u_basis;  // tau_0i, tau_i0
  std::vector<ComplexMatrix> p_basis;  // tau_ij
  std::vector<ComplexMatrix> a_basis;  // tau_11, tau_22, tau_33
};

CartanSplit cartan_split();

/// Real dimension of the span of `basis` inside the real vector space of 4x4
/// complex matrices.
int real_span_dimension(const std::vector<ComplexMatrix>& basis);

/// Distance from x to the real span of `basis` (max entry of the residual).
double span_residual(const ComplexMatrix& x, const std::vector<ComplexMatrix>& basis);

/// Dimensions, u ∩ p = 0, the reality/symmetry classification, closure of the
/// brackets and commutativity of a.
Report cartan_report(const CartanSplit& split, const Tolerances& tol = kTolerances);

}  // namespace fuzzybit
