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

#include "fuzzybit/twoqubit.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/format.h>

#include "fuzzybit/error.hpp"

namespace fuzzybit {
namespace {

ComplexMatrix density_from_array(const Eigen::Matrix4d& r) {
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(4, 4);
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      if (r(mu, nu) != 0.0) rho += (0.25 * r(mu, nu)) * pauli_product(mu, nu).entries();
    }
  }
  return ComplexMatrix(std::move(rho));
}

double min_eigenvalue(const ComplexMatrix& rho, const Tolerances& tol) {
  return hermitian_eigen(rho, tol).eigenvalues.front();
}

// Summing a fixed multiset of terms in sorted order makes the result depend
// only on the multiset, so permuted tables agree bit for bit.
double sorted_sum(std::array<double, 4> terms) {
  std::sort(terms.begin(), terms.end());
  return ((terms[0] + terms[1]) + terms[2]) + terms[3];
}

double sign_of(QubitClass c) { return c == QubitClass::Minus ? -1.0 : 1.0; }

bool separates(QubitClass c) { return c == QubitClass::Plus || c == QubitClass::Minus; }

}  // namespace

BlochMatrix BlochMatrix::from_blocks(const Vector3& s, const Vector3& r, const Matrix3& R,
                                     const Tolerances& tol) {
  if (!s.allFinite() || !r.allFinite() || !R.allFinite()) {
    throw DomainError("Bloch matrix has non-finite entries");
  }
  BlochMatrix bm(s, r, R);
  const double bound = 1.0 + tol.bloch_bounds;
  if (s.norm() > bound) throw DomainError(fmt::format("|s| = {} exceeds 1", s.norm()));
  if (r.norm() > bound) throw DomainError(fmt::format("|r| = {} exceeds 1", r.norm()));
  if (R.cwiseAbs().maxCoeff() > bound) throw DomainError("correlation entry exceeds 1 in modulus");
  if (R.rowwise().norm().maxCoeff() > bound) throw DomainError("correlation row norm exceeds 1");
  if (R.colwise().norm().maxCoeff() > bound) throw DomainError("correlation column norm exceeds 1");
  const double sum = R.squaredNorm() + s.squaredNorm() + r.squaredNorm();
  if (sum > 3.0 + tol.bloch_norm_sum) {
    throw DomainError(fmt::format("tr(R^T R) + |s|^2 + |r|^2 = {} exceeds 3", sum));
  }
  const double lmin = min_eigenvalue(bm.density_matrix(), tol);
  if (lmin < -tol.density_positivity) {
    throw DomainError(fmt::format("density matrix has negative eigenvalue {}", lmin));
  }
  return bm;
}

BlochMatrix BlochMatrix::from_array(const Eigen::Matrix4d& a, const Tolerances& tol) {
  if (std::abs(a(0, 0) - 1.0) > tol.density_trace) {
    throw DomainError(fmt::format("r_00 = {} but must be 1", a(0, 0)));
  }
  return from_blocks(a.block<3, 1>(1, 0), a.block<1, 3>(0, 1).transpose(), a.block<3, 3>(1, 1),
                     tol);
}

BlochMatrix BlochMatrix::from_density(const ComplexMatrix& rho, const Tolerances& tol) {
  if (rho.dim() != 4) throw DimensionError("two-qubit density matrix must be 4x4");
  if (!rho.is_hermitian(tol.hermitian)) throw DomainError("density matrix is not hermitian");
  if (std::abs(rho.trace() - Complex{1.0}) > tol.density_trace) {
    throw DomainError("density matrix trace is not 1");
  }
  Eigen::Matrix4d a;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      a(mu, nu) = (rho.entries() * pauli_product(mu, nu).entries()).trace().real();
    }
  }
  a(0, 0) = 1.0;
  return from_array(a, tol);
}

BlochMatrix BlochMatrix::maximally_mixed() {
  return BlochMatrix(Vector3::Zero(), Vector3::Zero(), Matrix3::Zero());
}

double BlochMatrix::operator()(int mu, int nu) const {
  if (mu < 0 || mu > 3 || nu < 0 || nu > 3) throw DimensionError("Bloch index out of range");
  if (mu == 0) return nu == 0 ? 1.0 : r_[nu - 1];
  if (nu == 0) return s_[mu - 1];
  return R_(mu - 1, nu - 1);
}

Eigen::Matrix4d BlochMatrix::array() const {
  Eigen::Matrix4d a;
  a(0, 0) = 1.0;
  a.block<1, 3>(0, 1) = r_.transpose();
  a.block<3, 1>(1, 0) = s_;
  a.block<3, 3>(1, 1) = R_;
  return a;
}

ComplexMatrix BlochMatrix::density_matrix() const { return density_from_array(array()); }

QubitState trace_out(const BlochMatrix& bm, Subsystem which) {
  return QubitState::from_bloch(0.5 * (which == Subsystem::First ? bm.s() : bm.r()));
}

ComplexMatrix FactorObservable::matrix() const { return tensor_product(a.matrix(), b.matrix()); }

double membership_two(const Vector3& ahat, const Vector3& bhat, const BlochMatrix& bm,
                      QubitClass a, QubitClass b, const Tolerances& tol) {
  if (a == QubitClass::None || b == QubitClass::None) return 0.0;  // types 1-3
  if (a == QubitClass::Both && b == QubitClass::Both) return 1.0;  // type 6
  if (a == QubitClass::Both) {
    require_unit(bhat, tol);
    return 0.5 * (1.0 + sign_of(b) * bm.r().dot(bhat));
  }
  if (b == QubitClass::Both) {
    require_unit(ahat, tol);
    return 0.5 * (1.0 + sign_of(a) * bm.s().dot(ahat));
  }
  require_unit(ahat, tol);
  require_unit(bhat, tol);
  const double ea = sign_of(a);
  const double eb = sign_of(b);
  const std::array<double, 4> terms{1.0, ea * bm.s().dot(ahat), eb * bm.r().dot(bhat),
                                    ea * eb * ahat.dot(bm.correlation() * bhat)};
  return 0.25 * sorted_sum(terms);
}

double membership_two(const FactorObservable& c, const BorelSet& ea, const BorelSet& eb,
                      const BlochMatrix& bm, const Tolerances& tol) {
  const QubitClass ca = classify(c.a, ea, tol);
  const QubitClass cb = classify(c.b, eb, tol);
  const Vector3 ahat = separates(ca) ? c.a.axis() : Vector3::UnitZ().eval();
  const Vector3 bhat = separates(cb) ? c.b.axis() : Vector3::UnitZ().eval();
  return membership_two(ahat, bhat, bm, ca, cb, tol);
}

Projector factor_projector(const Vector3& ahat, const Vector3& bhat, QubitClass a, QubitClass b,
                           const Tolerances& tol) {
  return tensor_product(axis_projector(ahat, a, tol), axis_projector(bhat, b, tol));
}

PureTwoQubit PureTwoQubit::from_amplitudes(const Eigen::Matrix2cd& lambda, const Tolerances& tol) {
  if (!lambda.allFinite()) throw DomainError("amplitudes have non-finite entries");
  if (std::abs(lambda.squaredNorm() - 1.0) > tol.amplitude_norm) {
    throw DomainError(fmt::format("sum |lambda_ij|^2 = {} but must be 1", lambda.squaredNorm()));
  }
  return PureTwoQubit(lambda);
}

ComplexVector PureTwoQubit::state_vector() const {
  ComplexVector v(4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) v[2 * i + j] = lambda_(i, j);
  }
  return v;
}

ComplexMatrix PureTwoQubit::density_matrix() const {
  const ComplexVector v = state_vector();
  return ComplexMatrix(v * v.adjoint());
}

Vector3 lambda_vector(const PureTwoQubit& psi) {
  const Complex l1 = psi.amplitudes()(0, 0);
  const Complex l2 = psi.amplitudes()(0, 1);
  const Complex c = std::conj(l1) * l2;
  return {2.0 * c.real(), 2.0 * c.imag(), std::norm(l1) - std::norm(l2)};
}

double membership_pure_two(const PureTwoQubit& psi, const Vector3& bhat, const Tolerances& tol) {
  require_unit(bhat, tol);
  const Complex l1 = psi.amplitudes()(0, 0);
  const Complex l2 = psi.amplitudes()(0, 1);
  return 0.5 * (std::norm(l1) + std::norm(l2) + bhat.dot(lambda_vector(psi)));
}

Report inequality_suite(const BlochMatrix& bm, const Tolerances& tol) {
  Report report;
  const double slack = tol.bloch_bounds;
  const auto bound_check = [&](std::string name, double value, double bound, double eps) {
    report.add(make_check(std::move(name), value <= bound + eps, bound - value,
                          fmt::format("value={}", format_number(value))));
  };
  const Matrix3& R = bm.correlation();
  bound_check("s_norm", bm.s().norm(), 1.0, slack);
  bound_check("r_norm", bm.r().norm(), 1.0, slack);
  bound_check("R_entries", R.cwiseAbs().maxCoeff(), 1.0, slack);
  bound_check("R_row_norms", R.rowwise().norm().maxCoeff(), 1.0, slack);
  bound_check("R_column_norms", R.colwise().norm().maxCoeff(), 1.0, slack);
  // f++ + f-- = 1/2 (1 + a^T R b) <= 1 over all axes is the spectral norm bound.
  const double spectral = Eigen::JacobiSVD<Matrix3>(R).singularValues()(0);
  bound_check("R_spectral_norm", spectral, 1.0, slack);
  bound_check("norm_sum", R.squaredNorm() + bm.s().squaredNorm() + bm.r().squaredNorm(), 3.0,
              tol.bloch_norm_sum);
  const double lmin = min_eigenvalue(bm.density_matrix(), tol);
  report.add(make_check("positivity", lmin >= -tol.density_positivity, lmin,
                        fmt::format("min_eigenvalue={}", format_number(lmin))));
  return report;
}

bool locally_maximally_mixed(const BlochMatrix& bm, const Tolerances& tol) {
  return bm.s().norm() <= tol.bloch_bounds && bm.r().norm() <= tol.bloch_bounds;
}

}  // namespace fuzzybit
