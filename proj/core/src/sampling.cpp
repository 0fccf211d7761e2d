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

#include "fuzzybit/sampling.hpp"

#include <cmath>
#include <vector>

#include <Eigen/Geometry>

namespace fuzzybit {
namespace {

Complex complex_normal(std::mt19937_64& g) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(g);
  return {re, n(g)};
}

Vector3 normal3(std::mt19937_64& g) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vector3 v;
  for (int i = 0; i < 3; ++i) v[i] = n(g);
  return v;
}

Vector3 sphere_point(std::mt19937_64& g) {
  for (;;) {
    const Vector3 v = normal3(g);
    const double len = v.norm();
    if (len > 1e-8) return v / len;
  }
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::mt19937_64 Sampler::engine(std::uint64_t index, Stream stream) const {
  const std::uint64_t key =
      splitmix64(splitmix64(seed_) ^ splitmix64(index) ^ (static_cast<std::uint64_t>(stream) << 56));
  return std::mt19937_64(key);
}

double Sampler::uniform(std::uint64_t index, Stream stream, double lo, double hi) const {
  auto g = engine(index, stream);
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

Vector3 Sampler::unit_vector(std::uint64_t index, Stream stream) const {
  auto g = engine(index, stream);
  return sphere_point(g);
}

Matrix3 Sampler::rotation(std::uint64_t index) const {
  auto g = engine(index, Stream::Rotation);
  std::normal_distribution<double> n(0.0, 1.0);
  const double w = n(g), x = n(g), y = n(g), z = n(g);
  return Eigen::Quaterniond(w, x, y, z).normalized().toRotationMatrix();
}

QubitClass Sampler::qubit_class(std::uint64_t index, Stream stream) const {
  auto g = engine(index, stream);
  static constexpr QubitClass kClasses[] = {QubitClass::None, QubitClass::Plus, QubitClass::Minus,
                                            QubitClass::Both};
  return kClasses[std::uniform_int_distribution<int>(0, 3)(g)];
}

QubitState Sampler::qubit_state(std::uint64_t index) const {
  auto g = engine(index, Stream::QubitState);
  const Vector3 dir = sphere_point(g);
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(g);
  const double radius = index % 4 == 0 ? 0.5 : 0.5 * std::cbrt(u);
  return QubitState::from_bloch(radius * dir);
}

ComplexMatrix Sampler::density_matrix(std::uint64_t index) const {
  auto g = engine(index, Stream::Density);
  const int k = 1 + static_cast<int>(index % 4);
  Eigen::MatrixXcd m(4, k);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < 4; ++i) m(i, j) = complex_normal(g);
  }
  Eigen::MatrixXcd rho = m * m.adjoint();
  rho /= rho.trace().real();
  // Exact hermiticity; the product is hermitian only to rounding.
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return ComplexMatrix(std::move(rho));
}

BlochMatrix Sampler::two_qubit_state(std::uint64_t index) const {
  return BlochMatrix::from_density(density_matrix(index));
}

QutritBloch Sampler::qutrit_state(std::uint64_t index) const {
  auto g = engine(index, Stream::Qutrit);
  const int k = 1 + static_cast<int>(index % 3);
  // Columns of T are the triplet vectors |00>, |q_s>, |11>.
  const Eigen::MatrixXcd t = entangled_basis_matrix().entries().topRows(3).adjoint();
  Eigen::MatrixXcd m(3, k);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < 3; ++i) m(i, j) = complex_normal(g);
  }
  Eigen::MatrixXcd rho = t * (m * m.adjoint()) * t.adjoint();
  rho /= rho.trace().real();
  if (index % 3 == 0) {
    const double w = std::uniform_real_distribution<double>(0.0, 0.5)(g);
    const Eigen::VectorXcd qa = entangled_basis_matrix().entries().row(3).adjoint();
    rho = ((1.0 - w) * rho + w * (qa * qa.adjoint())).eval();
  }
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return QutritBloch::from_bloch_matrix(BlochMatrix::from_density(ComplexMatrix(std::move(rho))));
}

Projector Sampler::projector(std::uint64_t index, int dim) const {
  auto g = engine(index, Stream::Projector);
  const int k = std::uniform_int_distribution<int>(0, dim)(g);
  std::vector<ComplexVector> vs;
  for (int j = 0; j < k; ++j) {
    ComplexVector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = complex_normal(g);
    vs.push_back(std::move(v));
  }
  return Projector::onto_span(vs, dim);
}

}  // namespace fuzzybit
