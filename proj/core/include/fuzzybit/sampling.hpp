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

// Deterministic random states, axes and projectors. Every draw is a pure
// function of (seed, index, stream), so sweeps can be split across threads or
// re-run one sample at a time and still see the same numbers.

#include <cstdint>
#include <random>

#include "fuzzybit/borel.hpp"
#include "fuzzybit/linalg.hpp"
#include "fuzzybit/qubit.hpp"
#include "fuzzybit/qutrit.hpp"
#include "fuzzybit/twoqubit.hpp"

namespace fuzzybit {

inline constexpr std::uint64_t kDefaultSeed = 0xF0221B17;

enum class Stream : std::uint64_t {
  QubitState = 1,
  Axis,
  SecondAxis,
  Density,
  Qutrit,
  Projector,
  Rotation,
  Class,
  Angle,
};

std::uint64_t splitmix64(std::uint64_t x);

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = kDefaultSeed) : seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::mt19937_64 engine(std::uint64_t index, Stream stream) const;

  double uniform(std::uint64_t index, Stream stream, double lo, double hi) const;
  /// Uniform on the unit sphere.
  Vector3 unit_vector(std::uint64_t index, Stream stream = Stream::Axis) const;
  /// Uniform rotation in SO(3).
  Matrix3 rotation(std::uint64_t index) const;
  QubitClass qubit_class(std::uint64_t index, Stream stream = Stream::Class) const;
  /// Uniform in the Bloch ball of radius 1/2; every fourth index is pure.
  QubitState qubit_state(std::uint64_t index) const;
  /// G G^dagger / tr(G G^dagger) with G a complex Gaussian 4 x k matrix,
  /// k = 1 + index mod 4, so ranks 1 to 4 all occur.
  ComplexMatrix density_matrix(std::uint64_t index) const;
  BlochMatrix two_qubit_state(std::uint64_t index) const;
  /// Random mixture on the triplet subspace; every third index also carries
  /// some singlet population, which the Bloch condition allows.
  QutritBloch qutrit_state(std::uint64_t index) const;
  /// Projector onto the span of k Gaussian vectors, k uniform in 0..dim.
  Projector projector(std::uint64_t index, int dim) const;

 private:
  std::uint64_t seed_;
};

}  // namespace fuzzybit
