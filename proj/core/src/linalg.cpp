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

#include "fuzzybit/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "fuzzybit/error.hpp"

namespace fuzzybit {

namespace {

void check_dim(int dim) {
  if (dim != 2 && dim != 4) {
    throw DimensionError("matrix dimension must be 2 or 4, got " + std::to_string(dim));
  }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(what) + ": dimension mismatch " + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(Storage entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw DimensionError("matrix must be square");
  }
  check_dim(static_cast<int>(entries_.rows()));
  if (!entries_.allFinite()) {
    throw DomainError("matrix has non-finite entries");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  check_dim(static_cast<int>(n));
  entries_.resize(n, n);
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n) {
      throw DimensionError("ragged matrix rows");
    }
    Eigen::Index c = 0;
    for (const auto& v : row) entries_(r, c++) = v;
    ++r;
  }
  if (!entries_.allFinite()) {
    throw DomainError("matrix has non-finite entries");
  }
}

ComplexMatrix ComplexMatrix::zero(int dim) {
  check_dim(dim);
  return ComplexMatrix(Storage::Zero(dim, dim));
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  check_dim(dim);
  return ComplexMatrix(Storage::Identity(dim, dim));
}

ComplexMatrix ComplexMatrix::adjoint() const { return ComplexMatrix(entries_.adjoint()); }
ComplexMatrix ComplexMatrix::conjugate() const { return ComplexMatrix(entries_.conjugate()); }
ComplexMatrix ComplexMatrix::transpose() const { return ComplexMatrix(entries_.transpose()); }

bool ComplexMatrix::is_hermitian(double tol) const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool ComplexMatrix::is_anti_hermitian(double tol) const {
  return (entries_ + entries_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool ComplexMatrix::is_unitary(double tol) const {
  const Storage id = Storage::Identity(entries_.rows(), entries_.cols());
  return (entries_ * entries_.adjoint() - id).cwiseAbs().maxCoeff() <= tol;
}

double ComplexMatrix::max_abs() const { return entries_.cwiseAbs().maxCoeff(); }

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator+");
  return ComplexMatrix(a.entries_ + b.entries_);
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator-");
  return ComplexMatrix(a.entries_ - b.entries_);
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator*");
  return ComplexMatrix(a.entries_ * b.entries_);
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) { return ComplexMatrix(s * a.entries_); }

ComplexMatrix operator-(const ComplexMatrix& a) { return ComplexMatrix(-a.entries_); }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  return (a.entries() - b.entries()).cwiseAbs().maxCoeff();
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

const ComplexMatrix& pauli(int mu) {
  static const std::array<ComplexMatrix, 4> kPauli = {
      ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}},
      ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
      ComplexMatrix{{0.0, -kI}, {kI, 0.0}},
      ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
  };
  if (mu < 0 || mu > 3) throw DomainError("Pauli index out of range");
  return kPauli[static_cast<std::size_t>(mu)];
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw DimensionError("tensor_product needs two 2x2 factors");
  }
  return ComplexMatrix(Eigen::kroneckerProduct(a.entries(), b.entries()).eval());
}

const ComplexMatrix& pauli_product(int mu, int nu) {
  static const auto kTable = [] {
    std::vector<ComplexMatrix> t;
    t.reserve(16);
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) t.push_back(tensor_product(pauli(m), pauli(n)));
    return t;
  }();
  if (mu < 0 || mu > 3 || nu < 0 || nu > 3) throw DomainError("Pauli index out of range");
  return kTable[static_cast<std::size_t>(4 * mu + nu)];
}

ComplexMatrix pauli_combination(double c0, const Vector3& c) {
  ComplexMatrix::Storage m = c0 * pauli(0).entries();
  for (int i = 0; i < 3; ++i) m += c[i] * pauli(i + 1).entries();
  return ComplexMatrix(std::move(m));
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep) {
  if (rho.dim() != 4) throw DimensionError("partial_trace needs a 4x4 operator");
  ComplexMatrix::Storage out = ComplexMatrix::Storage::Zero(2, 2);
  // index = 2*i + j with i the first factor, j the second.
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int k = 0; k < 2; ++k) {
        out(a, b) += keep == Subsystem::First ? rho(2 * a + k, 2 * b + k)
                                              : rho(2 * k + a, 2 * k + b);
      }
    }
  }
  return ComplexMatrix(std::move(out));
}

HermitianEigen hermitian_eigen(const ComplexMatrix& a, const Tolerances& tol) {
  if (!a.is_hermitian(tol.hermitian)) {
    throw DomainError("hermitian_eigen: input is not hermitian");
  }
  // Symmetrize away the sub-tolerance anti-hermitian part before solving.
  const ComplexMatrix::Storage h = 0.5 * (a.entries() + a.entries().adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix::Storage> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian_eigen: eigensolver did not converge");
  }
  const auto& values = solver.eigenvalues();
  return HermitianEigen{std::vector<double>(values.data(), values.data() + values.size()),
                        ComplexMatrix(solver.eigenvectors())};
}

ComplexMatrix matrix_exp(const ComplexMatrix& x) {
  if (x.is_anti_hermitian(1e-12)) {
    // x = -i h with h hermitian, exp(x) = V exp(-i Λ) V†.
    const ComplexMatrix h = kI * x;
    const auto eig = hermitian_eigen(h);
    const auto& v = eig.eigenvectors.entries();
    Eigen::VectorXcd phases(x.dim());
    for (int k = 0; k < x.dim(); ++k) {
      phases[k] = std::exp(-kI * eig.eigenvalues[static_cast<std::size_t>(k)]);
    }
    return ComplexMatrix(v * phases.asDiagonal() * v.adjoint());
  }
  return ComplexMatrix(x.entries().exp().eval());
}

Projector Projector::from_matrix(ComplexMatrix m, const Tolerances& tol) {
  if (!m.is_hermitian(tol.hermitian)) {
    throw DomainError("projector is not hermitian");
  }
  if (max_abs_diff(m * m, m) > tol.idempotent) {
    throw DomainError("projector is not idempotent");
  }
  return Projector(std::move(m));
}

Projector Projector::zero(int dim) { return Projector(ComplexMatrix::zero(dim)); }

Projector Projector::identity(int dim) { return Projector(ComplexMatrix::identity(dim)); }

Projector Projector::support(const ComplexMatrix& h, double cutoff) {
  const auto eig = hermitian_eigen(h);
  const auto& v = eig.eigenvectors.entries();
  ComplexMatrix::Storage p = ComplexMatrix::Storage::Zero(h.dim(), h.dim());
  for (int k = 0; k < h.dim(); ++k) {
    if (eig.eigenvalues[static_cast<std::size_t>(k)] > cutoff) {
      p += v.col(k) * v.col(k).adjoint();
    }
  }
  return Projector(ComplexMatrix(std::move(p)));
}

Projector Projector::onto_span(std::span<const ComplexVector> vectors, int dim) {
  ComplexMatrix::Storage gram = ComplexMatrix::Storage::Zero(dim, dim);
  for (const auto& v : vectors) {
    if (v.size() != dim) throw DimensionError("onto_span: vector length mismatch");
    gram += v * v.adjoint();
  }
  const double scale = std::max(1.0, gram.cwiseAbs().maxCoeff());
  return support(ComplexMatrix(std::move(gram)), 1e-12 * scale);
}

int Projector::rank() const { return static_cast<int>(std::lround(matrix_.trace().real())); }

Projector tensor_product(const Projector& a, const Projector& b) {
  return Projector(tensor_product(a.matrix(), b.matrix()));
}

double trace_product(const Projector& p, const ComplexMatrix& rho, const Tolerances& tol) {
  if (p.dim() != rho.dim()) throw DimensionError("trace_product: dimension mismatch");
  const Complex t = (p.matrix().entries() * rho.entries()).trace();
  if (std::abs(t.imag()) > tol.trace_imag) {
    throw DomainError("trace_product: imaginary residue, input not hermitian");
  }
  return t.real();
}

Projector subspace_meet(const Projector& p, const Projector& q, const Tolerances& tol) {
  if (p.dim() != q.dim()) throw DimensionError("subspace_meet: dimension mismatch");
  // P+Q has eigenvalue 2 exactly on range(P) ∩ range(Q) and < 2 elsewhere.
  return Projector::support(p.matrix() + q.matrix(), 2.0 - tol.subspace);
}

Projector subspace_join(const Projector& p, const Projector& q, const Tolerances& tol) {
  if (p.dim() != q.dim()) throw DimensionError("subspace_join: dimension mismatch");
  return Projector::support(p.matrix() + q.matrix(), tol.subspace);
}

Projector orthocomplement(const Projector& p) {
  return Projector::from_matrix(ComplexMatrix::identity(p.dim()) - p.matrix());
}

bool is_below(const Projector& p, const Projector& q, double tol) {
  return max_abs_diff(q.matrix() * p.matrix(), p.matrix()) <= tol;
}

double projector_distance(const Projector& p, const Projector& q) {
  const auto eig = hermitian_eigen(p.matrix() - q.matrix());
  double worst = 0.0;
  for (double v : eig.eigenvalues) worst = std::max(worst, std::abs(v));
  return worst;
}

double orthomodular_residual(const Projector& p, const Projector& q, const Tolerances& tol) {
  const Projector rhs = subspace_join(p, subspace_meet(q, orthocomplement(p), tol), tol);
  return max_abs_diff(q.matrix(), rhs.matrix());
}

DistributivityWitness distributivity_counterexample(int dim, const Tolerances& tol) {
  ComplexVector e1 = ComplexVector::Zero(dim);
  ComplexVector e2 = ComplexVector::Zero(dim);
  e1[0] = 1.0;
  e2[1] = 1.0;
  const ComplexVector e12 = e1 + e2;
  auto a = Projector::onto_span(std::span(&e1, 1), dim);
  auto b = Projector::onto_span(std::span(&e2, 1), dim);
  auto c = Projector::onto_span(std::span(&e12, 1), dim);
  auto lhs = subspace_meet(a, subspace_join(b, c, tol), tol);
  auto rhs = subspace_join(subspace_meet(a, b, tol), subspace_meet(a, c, tol), tol);
  const double gap = projector_distance(lhs, rhs);
  return DistributivityWitness{std::move(a), std::move(b), std::move(c), std::move(lhs),
                               std::move(rhs), gap};
}

}  // namespace fuzzybit
