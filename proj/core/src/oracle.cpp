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

#include "fuzzybit/oracle.hpp"

#include <cmath>

namespace fuzzybit {

Projector numeric_spectral_projector(const ComplexMatrix& a, const BorelSet& e,
                                     const Tolerances& tol) {
  const HermitianEigen eig = hermitian_eigen(a, tol);
  const std::vector<double> distinct = distinct_eigenvalues(eig.eigenvalues, tol);
  const EigenSelection sel = classify(e, distinct, tol);
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(a.dim(), a.dim());
  for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i) {
    // Map each eigenvalue to its deduplicated representative.
    std::size_t k = 0;
    while (k + 1 < distinct.size() &&
           std::abs(eig.eigenvalues[i] - distinct[k]) > std::abs(eig.eigenvalues[i] - distinct[k + 1])) {
      ++k;
    }
    if (!sel.mask[k]) continue;
    const ComplexVector v = eig.eigenvectors.entries().col(static_cast<Eigen::Index>(i));
    p += v * v.adjoint();
  }
  return Projector::from_matrix(ComplexMatrix(std::move(p)), tol);
}

BorelSet representative_borel_set(double lo, double hi, QubitClass c) {
  const double mid = 0.5 * (lo + hi);
  switch (c) {
    case QubitClass::None: return BorelSet::interval(hi + 1.0, hi + 2.0);
    case QubitClass::Plus: return BorelSet::interval(mid, hi + 1.0);
    case QubitClass::Minus: return BorelSet::interval(lo - 1.0, mid);
    case QubitClass::Both: return BorelSet::interval(lo - 1.0, hi + 1.0);
  }
  return {};
}

double oracle_membership_qubit(const Observable2& a, const BorelSet& e, const ComplexMatrix& rho,
                               const Tolerances& tol) {
  return trace_product(numeric_spectral_projector(a.matrix(), e, tol), rho, tol);
}

double oracle_membership_two(const FactorObservable& c, const BorelSet& ea, const BorelSet& eb,
                             const ComplexMatrix& rho, const Tolerances& tol) {
  const Projector p = tensor_product(numeric_spectral_projector(c.a.matrix(), ea, tol),
                                     numeric_spectral_projector(c.b.matrix(), eb, tol));
  return trace_product(p, rho, tol);
}

}  // namespace fuzzybit
