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

#include "fuzzybit/gates.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "fuzzybit/error.hpp"

namespace fuzzybit {
namespace {

constexpr std::array<std::pair<QubitClass, QubitClass>, 4> kSigns{{
    {QubitClass::Plus, QubitClass::Plus},
    {QubitClass::Plus, QubitClass::Minus},
    {QubitClass::Minus, QubitClass::Plus},
    {QubitClass::Minus, QubitClass::Minus},
}};

std::array<double, 4> z_memberships(const BlochMatrix& bm) {
  std::array<double, 4> out{};
  for (std::size_t k = 0; k < 4; ++k) {
    out[k] = membership_two(Vector3::UnitZ(), Vector3::UnitZ(), bm, kSigns[k].first, kSigns[k].second);
  }
  return out;
}

void require_system(GateName g, const State& s) {
  if (gate_spec(g).system() != system_of(s)) {
    throw DomainError(fmt::format("gate {} does not act on a {} state", to_string(g),
                                  to_string(system_of(s))));
  }
}

}  // namespace

std::string_view to_string(GateName g) {
  switch (g) {
    case GateName::Not: return "not";
    case GateName::SqrtNot: return "sqrt-not";
    case GateName::Cnot: return "cnot";
  }
  return "?";
}

GateName parse_gate_name(std::string_view text) {
  if (text == "not") return GateName::Not;
  if (text == "sqrt-not") return GateName::SqrtNot;
  if (text == "cnot") return GateName::Cnot;
  throw ParseError(fmt::format("unknown gate '{}' (expected not, sqrt-not or cnot)", text));
}

const GateSpec& gate_spec(GateName g) {
  static const GateSpec kNot{GateName::Not, pauli(1)};
  static const GateSpec kSqrtNot{
      GateName::SqrtNot,
      ComplexMatrix{{Complex{0.5, 0.5}, Complex{0.5, -0.5}}, {Complex{0.5, -0.5}, Complex{0.5, 0.5}}}};
  static const GateSpec kCnot{GateName::Cnot, ComplexMatrix{{1.0, 0.0, 0.0, 0.0},
                                                            {0.0, 1.0, 0.0, 0.0},
                                                            {0.0, 0.0, 0.0, 1.0},
                                                            {0.0, 0.0, 1.0, 0.0}}};
  switch (g) {
    case GateName::Not: return kNot;
    case GateName::SqrtNot: return kSqrtNot;
    case GateName::Cnot: return kCnot;
  }
  throw Error("unreachable gate");
}

QubitState apply_not(const QubitState& s) {
  const Vector3& r = s.bloch();
  return QubitState::from_bloch(Vector3(r[0], -r[1], -r[2]));
}

QubitState apply_sqrt_not(const QubitState& s) {
  const Vector3& r = s.bloch();
  return QubitState::from_bloch(Vector3(r[0], -r[2], r[1]));
}

BlochMatrix apply_cnot(const BlochMatrix& bm) {
  const auto& x = bm;
  const Vector3 r(x(0, 1), x(3, 2), x(3, 3));
  const Vector3 s(x(1, 1), x(2, 1), x(3, 0));
  Matrix3 R;
  R << x(1, 0), x(2, 3), -x(2, 2),
       x(2, 0), -x(1, 3), x(1, 2),
       x(3, 1), x(0, 2), x(0, 3);
  return BlochMatrix::from_blocks(s, r, R);
}

State apply_gate(GateName g, const State& s) {
  require_system(g, s);
  switch (g) {
    case GateName::Not: return apply_not(std::get<QubitState>(s));
    case GateName::SqrtNot: return apply_sqrt_not(std::get<QubitState>(s));
    case GateName::Cnot: return apply_cnot(std::get<BlochMatrix>(s));
  }
  throw Error("unreachable gate");
}

State apply_gate_oracle(GateName g, const State& s) {
  require_system(g, s);
  const ComplexMatrix& u = gate_spec(g).unitary;
  if (const auto* q = std::get_if<QubitState>(&s)) {
    return QubitState::from_density(u * q->density_matrix() * u.adjoint());
  }
  return BlochMatrix::from_density(u * std::get<BlochMatrix>(s).density_matrix() * u.adjoint());
}

QubitState x_rotation(const QubitState& s, double theta) {
  const Vector3& r = s.bloch();
  const double c = std::cos(theta), sn = std::sin(theta);
  return QubitState::from_bloch(Vector3(r[0], c * r[1] - sn * r[2], sn * r[1] + c * r[2]));
}

ComplexMatrix x_rotation_unitary(double theta) {
  return matrix_exp(Complex{0.0, -0.5 * theta} * pauli(1));
}

double membership_after_gate(GateName g, const Functional& f, const State& s) {
  return f(apply_gate(g, s));
}

NotComplementResult not_vs_complement(const Vector3& ahat, const StateUniverse& u,
                                      const Tolerances& tol) {
  require_unit(ahat, tol);
  if (u.system() != System::Qubit) throw DomainError("NOT acts on the qubit universe");
  const Functional f = Functional::qubit(ahat, QubitClass::Plus);
  NotComplementResult res;
  for (const auto& s : u.states()) {
    const double gap = std::abs(membership_after_gate(GateName::Not, f, s) - (1.0 - f(s)));
    if (gap > res.max_gap) {
      res.max_gap = gap;
      res.witness = s;
    }
  }
  res.equal = res.max_gap <= tol.functional_equality;
  if (res.equal) res.witness.reset();
  res.analytic_equal = ahat[0] == 0.0;
  return res;
}

bool CnotTable::permutation_exact() const {
  return after[0] == before[0] && after[1] == before[1] && after[2] == before[3] &&
         after[3] == before[2];
}

CnotTable cnot_membership_table(const BlochMatrix& bm) {
  return {z_memberships(bm), z_memberships(apply_cnot(bm))};
}

std::vector<ContinuityRow> continuity_table(const Vector3& ahat, const QubitState& s, int points) {
  if (points < 2) throw DomainError("continuity table needs at least two points");
  std::vector<ContinuityRow> rows;
  for (int k = 0; k < points; ++k) {
    const double theta = std::numbers::pi * k / (points - 1);
    rows.push_back({theta, membership_qubit(ahat, x_rotation(s, theta), QubitClass::Plus)});
  }
  return rows;
}

}  // namespace fuzzybit
