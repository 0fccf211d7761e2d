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

#include "fuzzybit/qubit.hpp"

#include <array>
#include <cmath>

#include <fmt/format.h>

#include "fuzzybit/error.hpp"

namespace fuzzybit {

void require_unit(const Vector3& v, const Tolerances& tol) {
  if (!v.allFinite() || std::abs(v.norm() - 1.0) > tol.unit_vector) {
    throw DomainError(fmt::format("axis ({}, {}, {}) is not a unit vector", v[0], v[1], v[2]));
  }
}

QubitState QubitState::from_bloch(const Vector3& rho, const Tolerances& tol) {
  if (!rho.allFinite()) throw DomainError("Bloch vector has non-finite entries");
  if (rho.squaredNorm() > 0.25 + tol.bloch_ball) {
    throw DomainError(fmt::format("Bloch vector |rho| = {} lies outside the ball of radius 1/2",
                                  rho.norm()));
  }
  return QubitState(rho);
}

QubitState QubitState::from_density(const ComplexMatrix& rho, const Tolerances& tol) {
  if (rho.dim() != 2) throw DimensionError("qubit density matrix must be 2x2");
  if (!rho.is_hermitian(tol.hermitian)) throw DomainError("density matrix is not hermitian");
  if (std::abs(rho.trace() - Complex{1.0}) > tol.density_trace) {
    throw DomainError("density matrix trace is not 1");
  }
  Vector3 v;
  for (int i = 0; i < 3; ++i) {
    v[i] = 0.5 * (rho.entries() * pauli(i + 1).entries()).trace().real();
  }
  return from_bloch(v, tol);
}

QubitState QubitState::from_amplitudes(Complex psi0, Complex psi1, const Tolerances& tol) {
  const double n = std::norm(psi0) + std::norm(psi1);
  if (std::abs(n - 1.0) > tol.amplitude_norm) throw DomainError("amplitudes are not normalized");
  // <sigma_i>/2 for |psi>.
  const Complex c = std::conj(psi0) * psi1;
  return from_bloch(Vector3(c.real(), c.imag(), 0.5 * (std::norm(psi0) - std::norm(psi1))), tol);
}

QubitState QubitState::from_angle(double alpha) {
  return QubitState(Vector3(0.5 * std::sin(2.0 * alpha), 0.0, 0.5 * std::cos(2.0 * alpha)));
}

bool QubitState::is_pure(const Tolerances& tol) const {
  return std::abs(bloch_.norm() - 0.5) <= tol.purity;
}

ComplexMatrix QubitState::density_matrix() const { return pauli_combination(0.5, bloch_); }

ComplexMatrix Observable2::matrix() const { return pauli_combination(a0, avec); }

Vector3 Observable2::axis() const {
  const double n = avec.norm();
  if (n == 0.0) throw DomainError("degenerate observable has no axis");
  return avec / n;
}

std::pair<double, double> eigenvalues2(const Observable2& a) {
  const double n = a.avec.norm();
  return {a.a0 - n, a.a0 + n};
}

QubitClass classify(const Observable2& a, const BorelSet& e, const Tolerances& tol) {
  const auto [lo, hi] = eigenvalues2(a);
  const std::array<double, 2> values{lo, hi};
  return qubit_class(classify(e, values, tol));
}

Projector axis_projector(const Vector3& ahat, QubitClass c, const Tolerances& tol) {
  switch (c) {
    case QubitClass::None: return Projector::zero(2);
    case QubitClass::Both: return Projector::identity(2);
    case QubitClass::Plus: require_unit(ahat, tol); return Projector::from_matrix(pauli_combination(0.5, 0.5 * ahat), tol);
    case QubitClass::Minus: require_unit(ahat, tol); return Projector::from_matrix(pauli_combination(0.5, -0.5 * ahat), tol);
  }
  throw Error("unreachable qubit class");
}

Projector spectral_projector(const Observable2& a, const BorelSet& e, const Tolerances& tol) {
  const QubitClass c = classify(a, e, tol);
  if (c == QubitClass::None || c == QubitClass::Both) return axis_projector(Vector3::Zero(), c, tol);
  // A separating class implies two distinct eigenvalues, hence |a| > 0.
  return axis_projector(a.axis(), c, tol);
}

double membership_qubit(const Vector3& ahat, const QubitState& rho, QubitClass c,
                        const Tolerances& tol) {
  switch (c) {
    case QubitClass::None: return 0.0;
    case QubitClass::Both: return 1.0;
    case QubitClass::Plus: require_unit(ahat, tol); return 0.5 + ahat.dot(rho.bloch());
    case QubitClass::Minus: require_unit(ahat, tol); return 0.5 - ahat.dot(rho.bloch());
  }
  throw Error("unreachable qubit class");
}

double membership_qubit(const Observable2& a, const BorelSet& e, const QubitState& rho,
                        const Tolerances& tol) {
  const QubitClass c = classify(a, e, tol);
  if (c == QubitClass::None || c == QubitClass::Both) {
    return membership_qubit(Vector3::Zero(), rho, c, tol);
  }
  return membership_qubit(a.axis(), rho, c, tol);
}

double membership_pure_angle(double alpha) {
  const double c = std::cos(alpha);
  return c * c;
}

bool orthogonal_pair(const Vector3& ahat, const Vector3& bhat, const Tolerances& tol) {
  require_unit(ahat, tol);
  require_unit(bhat, tol);
  return (ahat + bhat).cwiseAbs().maxCoeff() <= tol.unit_vector;
}

std::optional<QubitState> orthogonality_witness(const Vector3& ahat, const Vector3& bhat,
                                                const Tolerances& tol) {
  if (orthogonal_pair(ahat, bhat, tol)) return std::nullopt;
  // f_a + f_b = 1 + (a + b).rho is largest on the pure state along a + b.
  const Vector3 sum = ahat + bhat;
  return QubitState::from_bloch(0.5 * sum / sum.norm(), tol);
}

}  // namespace fuzzybit
