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

#include "fuzzybit/tolerances.hpp"

#include <array>
#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "fuzzybit/error.hpp"

namespace fuzzybit {
namespace {

using Field = double Tolerances::*;

constexpr std::array<std::pair<std::string_view, Field>, 24> kFields{{
    {"hermitian", &Tolerances::hermitian},
    {"idempotent", &Tolerances::idempotent},
    {"eigen", &Tolerances::eigen},
    {"trace_imag", &Tolerances::trace_imag},
    {"subspace", &Tolerances::subspace},
    {"eigen_dedup", &Tolerances::eigen_dedup},
    {"bloch_ball", &Tolerances::bloch_ball},
    {"purity", &Tolerances::purity},
    {"unit_vector", &Tolerances::unit_vector},
    {"density_positivity", &Tolerances::density_positivity},
    {"bloch_bounds", &Tolerances::bloch_bounds},
    {"bloch_norm_sum", &Tolerances::bloch_norm_sum},
    {"density_trace", &Tolerances::density_trace},
    {"qutrit", &Tolerances::qutrit},
    {"oracle", &Tolerances::oracle},
    {"torus_oracle", &Tolerances::torus_oracle},
    {"cartan_closure", &Tolerances::cartan_closure},
    {"abelian", &Tolerances::abelian},
    {"fd_step", &Tolerances::fd_step},
    {"fd_match", &Tolerances::fd_match},
    {"functional_equality", &Tolerances::functional_equality},
    {"weak_disjointness", &Tolerances::weak_disjointness},
    {"amplitude_norm", &Tolerances::amplitude_norm},
    {"unitary", &Tolerances::unitary},
}};

}  // namespace

const std::vector<std::string_view>& tolerance_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const auto& [name, field] : kFields) out.push_back(name);
    return out;
  }();
  return names;
}

void set_tolerance(Tolerances& tol, std::string_view name, double value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw DomainError(fmt::format("tolerance {} must be a finite non-negative number", name));
  }
  for (const auto& [n, field] : kFields) {
    if (n == name) {
      tol.*field = value;
      return;
    }
  }
  throw ParseError(fmt::format("unknown tolerance '{}'", name));
}

}  // namespace fuzzybit
