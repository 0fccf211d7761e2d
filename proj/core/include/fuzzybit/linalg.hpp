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

// Dense complex matrices at dimension 2 and 4, hermitian eigensystems, the
// matrix exponential and the lattice of subspaces (projectors). Everything in
// the rest of the library is checked against the routines in this header.

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "fuzzybit/tolerances.hpp"

namespace fuzzybit {

using Complex = std::complex<double>;
using Vector3 = Eigen::Vector3d;
using Matrix3 = Eigen::Matrix3d;
using ComplexVector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Square complex matrix of dimension 2 or 4 with finite entries.
class ComplexMatrix {
 public:
  using Storage = Eigen::MatrixXcd;

  /// Throws DimensionError unless square of size 2 or 4, DomainError on NaN/Inf.
  explicit ComplexMatrix(Storage entries);

  /// Row-major construction: `rows.size()` must be 2 or 4 and every row as long.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix zero(int dim);
  static ComplexMatrix identity(int dim);

  int dim() const noexcept { return static_cast<int>(entries_.rows()); }
  const Storage& entries() const noexcept { return entries_; }
  Complex operator()(int row, int col) const { return entries_(row, col); }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;
  Complex trace() const { return entries_.trace(); }

  bool is_hermitian(double tol) const;
  bool is_anti_hermitian(double tol) const;
  bool is_unitary(double tol) const;
  /// Largest entry modulus.
  double max_abs() const;

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
  friend ComplexMatrix operator-(const ComplexMatrix& a);

 private:
  Storage entries_;
};

/// max_ij |a_ij - b_ij|; dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Commutator [a, b] = ab - ba.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// sigma_0 = identity, sigma_1..3 the Pauli matrices.
const ComplexMatrix& pauli(int mu);

/// Kronecker product of two 2x2 matrices in the ordered basis |00>,|01>,|10>,|11>.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// sigma_mu (x) sigma_nu.
const ComplexMatrix& pauli_product(int mu, int nu);

/// a*x0 + ... for a coefficient vector in the Pauli basis: c0*I + c.sigma.
ComplexMatrix pauli_combination(double c0, const Vector3& c);

enum class Subsystem { First, Second };

/// Reduced density matrix of a 4x4 operator, keeping `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep);

struct HermitianEigen {
  /// Ascending.
  std::vector<double> eigenvalues;
  /// Orthonormal columns, column i belongs to eigenvalues[i].
  ComplexMatrix eigenvectors;
};

/// Full eigensystem of a hermitian matrix; DomainError if not hermitian
/// within tol.hermitian.
HermitianEigen hermitian_eigen(const ComplexMatrix& a, const Tolerances& tol = kTolerances);

/// exp(x). Anti-hermitian input goes through the eigendecomposition of ix so
/// the result is unitary to rounding; anything else uses Pade scaling and
/// squaring.
ComplexMatrix matrix_exp(const ComplexMatrix& x);

/// Orthogonal projector. P = P^dagger within tol.hermitian and P*P = P within
/// tol.idempotent.
class Projector {
 public:
  /// Validates the projector invariants; DomainError otherwise.
  static Projector from_matrix(ComplexMatrix m, const Tolerances& tol = kTolerances);
  static Projector zero(int dim);
  static Projector identity(int dim);
  /// Projector onto the span of `vectors` (need not be orthonormal).
  static Projector onto_span(std::span<const ComplexVector> vectors, int dim);
  /// Projector onto the eigenvectors of a hermitian `h` whose eigenvalue is
  /// above `cutoff`.
  static Projector support(const ComplexMatrix& h, double cutoff);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  int dim() const noexcept { return matrix_.dim(); }
  /// Dimension of the range.
  int rank() const;

 private:
  friend Projector tensor_product(const Projector&, const Projector&);
  explicit Projector(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

Projector tensor_product(const Projector& a, const Projector& b);

/// Re tr(P rho). DomainError if the imaginary residue exceeds tol.trace_imag,
/// DimensionError on mismatched dimensions.
double trace_product(const Projector& p, const ComplexMatrix& rho,
                     const Tolerances& tol = kTolerances);

// Subspace lattice. meet = range(P) ∩ range(Q), from the eigenvalue-2
// eigenspace of P+Q; join = range(P) + range(Q), from the support of P+Q.
Projector subspace_meet(const Projector& p, const Projector& q,
                        const Tolerances& tol = kTolerances);
Projector subspace_join(const Projector& p, const Projector& q,
                        const Tolerances& tol = kTolerances);
Projector orthocomplement(const Projector& p);

/// range(p) ⊆ range(q), tested as q*p = p.
bool is_below(const Projector& p, const Projector& q, double tol);

/// Spectral norm of P - Q.
double projector_distance(const Projector& p, const Projector& q);

/// For p <= q: max-entry residual of q - (p ∨ (q ∧ p⊥)).
double orthomodular_residual(const Projector& p, const Projector& q,
                             const Tolerances& tol = kTolerances);

struct DistributivityWitness {
  Projector a, b, c;
  Projector lhs;  // a ∧ (b ∨ c)
  Projector rhs;  // (a ∧ b) ∨ (a ∧ c)
  double gap;     // projector_distance(lhs, rhs)
};

/// a = span(e1), b = span(e2), c = span(e1 + e2) in C^dim.
DistributivityWitness distributivity_counterexample(int dim = 2,
                                                    const Tolerances& tol = kTolerances);

}  // namespace fuzzybit
