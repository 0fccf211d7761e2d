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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "fuzzybit/error.hpp"
#include "fuzzybit/gates.hpp"
#include "fuzzybit/sampling.hpp"
#include "oracles.hpp"

namespace fuzzybit {
namespace {

namespace t = fuzzybit::testing;
using Q = QubitClass;
using std::numbers::pi;

Eigen::Matrix2cd not_matrix() { return t::sigma(1); }

Eigen::Matrix2cd sqrt_not_matrix() {
  Eigen::Matrix2cd u;
  u << t::C(0.5, 0.5), t::C(0.5, -0.5), t::C(0.5, -0.5), t::C(0.5, 0.5);
  return u;
}

Eigen::Matrix4cd cnot_matrix() {
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
  u(0, 0) = u(1, 1) = u(2, 3) = u(3, 2) = 1.0;
  return u;
}

Vector3 conjugate(const Eigen::Matrix2cd& u, const Vector3& rho) {
  return t::qubit_bloch(u * t::qubit_density(rho) * u.adjoint());
}

TEST(GateSpec, UnitariesAndNames) {
  for (GateName g : {GateName::Not, GateName::SqrtNot, GateName::Cnot}) {
    EXPECT_TRUE(gate_spec(g).unitary.is_unitary(1e-14)) << to_string(g);
    EXPECT_EQ(parse_gate_name(to_string(g)), g);
  }
  EXPECT_EQ(gate_spec(GateName::Cnot).system(), System::TwoQubit);
  EXPECT_EQ(gate_spec(GateName::SqrtNot).unitary.entries(), Eigen::MatrixXcd(sqrt_not_matrix()));
  EXPECT_EQ(gate_spec(GateName::Cnot).unitary.entries(), Eigen::MatrixXcd(cnot_matrix()));
  EXPECT_THROW(parse_gate_name("hadamard"), ParseError);
}

TEST(ApplyNot, Examples) {
  EXPECT_EQ(apply_not(QubitState::from_bloch({0, 0, 0.5})).bloch(), Vector3(0, 0, -0.5));
  EXPECT_EQ(apply_not(QubitState::from_bloch({0.5, 0, 0})).bloch(), Vector3(0.5, 0, 0));
}

TEST(ApplySqrtNot, Examples) {
  // The printed unitary sends the north pole to -y.
  EXPECT_EQ(apply_sqrt_not(QubitState::from_bloch({0, 0, 0.5})).bloch(), Vector3(0, -0.5, 0));
  EXPECT_LE((conjugate(sqrt_not_matrix(), {0, 0, 0.5}) - Vector3(0, -0.5, 0)).norm(), 1e-16);
}

TEST(ApplySqrtNot, TwiceIsNotExactly) {
  const Sampler sampler(3);
  for (std::uint64_t k = 0; k < 10000; ++k) {
    const auto s = sampler.qubit_state(k);
    EXPECT_EQ(apply_sqrt_not(apply_sqrt_not(s)).bloch(), apply_not(s).bloch());
  }
}

TEST(Gates, QubitMapsMatchConjugation) {
  const Sampler sampler(4);
  double worst_not = 0.0, worst_sqrt = 0.0;
  for (std::uint64_t k = 0; k < 10000; ++k) {
    const auto s = sampler.qubit_state(k);
    worst_not = std::max(worst_not, (apply_not(s).bloch() - conjugate(not_matrix(), s.bloch())).norm());
    worst_sqrt = std::max(worst_sqrt, (apply_sqrt_not(s).bloch() - conjugate(sqrt_not_matrix(), s.bloch())).norm());
  }
  EXPECT_LE(worst_not, 1e-12);
  EXPECT_LE(worst_sqrt, 1e-12);
}

TEST(Gates, CnotMatchesConjugation) {
  const Sampler sampler(5);
  double worst = 0.0;
  for (std::uint64_t k = 0; k < 10000; ++k) {
    const auto bm = sampler.two_qubit_state(k);
    const Eigen::Matrix4cd rho = t::two_qubit_density(bm.array());
    const Eigen::Matrix4d oracle = t::bloch_array(cnot_matrix() * rho * cnot_matrix().adjoint());
    worst = std::max(worst, (apply_cnot(bm).array() - oracle).cwiseAbs().maxCoeff());
  }
  EXPECT_LE(worst, 1e-12);
}

TEST(Gates, LibraryOracleAgreesWithMap) {
  const Sampler sampler(6);
  for (std::uint64_t k = 0; k < 300; ++k) {
    const State q = sampler.qubit_state(k);
    const State p = sampler.two_qubit_state(k);
    for (GateName g : {GateName::Not, GateName::SqrtNot}) {
      EXPECT_LE((std::get<QubitState>(apply_gate(g, q)).bloch() -
                 std::get<QubitState>(apply_gate_oracle(g, q)).bloch()).norm(), 1e-12);
    }
    EXPECT_LE((std::get<BlochMatrix>(apply_gate(GateName::Cnot, p)).array() -
               std::get<BlochMatrix>(apply_gate_oracle(GateName::Cnot, p)).array()).cwiseAbs().maxCoeff(),
              1e-12);
  }
  EXPECT_THROW(apply_gate(GateName::Cnot, State(QubitState::maximally_mixed())), DomainError);
}

TEST(ApplyCnot, ControlOneFlipsTarget) {
  Eigen::Matrix4cd in = Eigen::Matrix4cd::Zero(), out = Eigen::Matrix4cd::Zero();
  in(2, 2) = 1.0;   // |10><10|
  out(3, 3) = 1.0;  // |11><11|
  const auto bm = BlochMatrix::from_density(ComplexMatrix(in));
  EXPECT_LE((apply_cnot(bm).array() - t::bloch_array(out)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(ApplyCnot, MaximallyMixedIsFixed) {
  EXPECT_EQ(apply_cnot(BlochMatrix::maximally_mixed()).array(), BlochMatrix::maximally_mixed().array());
}

TEST(ApplyCnot, BuildsBellStateFromHadamard) {
  const double h = 1.0 / std::sqrt(2.0);
  const Eigen::Vector4cd plus_zero = t::ket({h, 0, h, 0});  // (H (x) I)|00>
  const auto out = apply_cnot(BlochMatrix::from_density(ComplexMatrix(t::pure(plus_zero))));
  EXPECT_LE(out.s().norm(), 1e-15);
  EXPECT_LE(out.r().norm(), 1e-15);
  const Matrix3 expected = Vector3(1, -1, 1).asDiagonal();
  EXPECT_LE((out.correlation() - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(CnotTable, PermutationIsExact) {
  const Sampler sampler(7);
  for (std::uint64_t k = 0; k < 10000; ++k) {
    const auto table = cnot_membership_table(sampler.two_qubit_state(k));
    ASSERT_TRUE(table.permutation_exact()) << k;
  }
}

TEST(MembershipAfterGate, NotOnZAxisIsComplement) {
  const Functional fz = Functional::qubit(Vector3::UnitZ(), Q::Plus);
  const Sampler sampler(8);
  for (std::uint64_t k = 0; k < 1000; ++k) {
    const State s = sampler.qubit_state(k);
    const double after = membership_after_gate(GateName::Not, fz, s);
    EXPECT_NEAR(after, 1.0 - fz(s), 1e-15);
    EXPECT_NEAR(after, 0.5 - std::get<QubitState>(s).bloch()(2), 1e-15);
  }
}

TEST(MembershipAfterGate, NotOnXAxisWitness) {
  const Functional fx = Functional::qubit(Vector3::UnitX(), Q::Plus);
  const State s = QubitState::from_bloch({0.3, 0, 0.2});
  EXPECT_NEAR(membership_after_gate(GateName::Not, fx, s), 0.8, 1e-15);
  EXPECT_NEAR(1.0 - fx(s), 0.2, 1e-15);
}

TEST(MembershipAfterGate, CnotTableForZAxes) {
  const auto bm = Sampler(9).two_qubit_state(3);
  const State after = apply_cnot(bm);
  const Vector3 z = Vector3::UnitZ();
  const auto f = [](Q a, Q b) { return Functional::two_qubit(Vector3::UnitZ(), Vector3::UnitZ(), a, b); };
  EXPECT_EQ(membership_after_gate(GateName::Cnot, f(Q::Plus, Q::Plus), State(bm)),
            membership_two(z, z, bm, Q::Plus, Q::Plus));
  EXPECT_EQ(f(Q::Minus, Q::Plus)(after), membership_two(z, z, bm, Q::Minus, Q::Minus));
  EXPECT_EQ(f(Q::Minus, Q::Minus)(after), membership_two(z, z, bm, Q::Minus, Q::Plus));
}

TEST(NotVsComplement, EqualityExactlyWhenAxisHasNoXComponent) {
  const auto u = StateUniverse::sampled(System::Qubit, 1000);
  const auto z = not_vs_complement(Vector3::UnitZ(), u);
  EXPECT_TRUE(z.equal);
  EXPECT_LE(z.max_gap, 1e-15);
  EXPECT_TRUE(z.analytic_equal);

  const auto x = not_vs_complement(Vector3::UnitX(), u);
  EXPECT_FALSE(x.equal);
  EXPECT_FALSE(x.analytic_equal);
  ASSERT_TRUE(x.witness.has_value());
  EXPECT_NEAR(x.max_gap, 1.0, 1e-15);  // attained on the +-x anchors

  const auto yz = not_vs_complement(Vector3(0, 0.6, 0.8), u);
  EXPECT_TRUE(yz.equal);
  EXPECT_TRUE(yz.analytic_equal);
}

TEST(XRotation, InterpolatesIdentitySqrtNotAndNot) {
  const Sampler sampler(10);
  for (std::uint64_t k = 0; k < 200; ++k) {
    const auto s = sampler.qubit_state(k);
    EXPECT_LE((x_rotation(s, 0).bloch() - s.bloch()).norm(), 0.0);
    EXPECT_LE((x_rotation(s, pi / 2).bloch() - apply_sqrt_not(s).bloch()).norm(), 1e-16);
    EXPECT_LE((x_rotation(s, pi).bloch() - apply_not(s).bloch()).norm(), 1e-16);
    const double theta = sampler.uniform(k, Stream::Angle, -pi, pi);
    const Eigen::Matrix2cd u = t::series_exp(Eigen::Matrix2cd(t::C(0, -0.5 * theta) * t::sigma(1)), 25);
    EXPECT_LE((x_rotation(s, theta).bloch() - conjugate(u, s.bloch())).norm(), 1e-12);
    EXPECT_LE(t::max_diff(x_rotation_unitary(theta).entries(), Eigen::MatrixXcd(u)), 1e-12);
  }
}

TEST(ContinuityTable, SmallStepsGiveSmallChanges) {
  const auto s = QubitState::from_bloch({0.1, 0.2, 0.4});
  const Vector3 a = Vector3(0, 0.6, 0.8);
  const auto rows = continuity_table(a, s, 181);
  ASSERT_EQ(rows.size(), 181u);
  EXPECT_EQ(rows.front().theta, 0.0);
  EXPECT_NEAR(rows.back().theta, pi, 1e-15);
  const double step = pi / 180;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    // |d f / d theta| <= |rho| for a rotation of the state.
    EXPECT_LE(std::abs(rows[k].membership - rows[k - 1].membership), 0.5 * step + 1e-15);
  }
  EXPECT_NEAR(rows.front().membership, membership_qubit(a, s, Q::Plus), 1e-15);
  EXPECT_NEAR(rows[90].membership, membership_qubit(a, apply_sqrt_not(s), Q::Plus), 1e-15);
  EXPECT_NEAR(rows.back().membership, membership_qubit(a, apply_not(s), Q::Plus), 1e-15);
  EXPECT_THROW(continuity_table(a, s, 1), DomainError);
}

}  // namespace
}  // namespace fuzzybit
