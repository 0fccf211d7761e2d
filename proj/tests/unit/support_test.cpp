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

// Plumbing: text formats, reports, tolerance overrides and the sampler.

#include <cmath>
#include <filesystem>
#include <set>

#include <gtest/gtest.h>

#include "fuzzybit/error.hpp"
#include "fuzzybit/io.hpp"
#include "fuzzybit/qutrit.hpp"
#include "fuzzybit/report.hpp"
#include "fuzzybit/sampling.hpp"
#include "fuzzybit/tolerances.hpp"

namespace fuzzybit {
namespace {

TEST(ParseReal, AcceptsAndRejects) {
  EXPECT_EQ(parse_real(" 0.25 "), 0.25);
  EXPECT_EQ(parse_real("+1e-3"), 1e-3);
  EXPECT_EQ(parse_real("-2"), -2.0);
  for (const char* bad : {"", "  ", "1.0x", "--1", "0x10", "1,2", "++1"}) {
    EXPECT_THROW(parse_real(bad), ParseError) << '"' << bad << '"';
  }
}

TEST(ParseVector3, Forms) {
  EXPECT_EQ(parse_vector3("0,0,1"), Vector3(0, 0, 1));
  EXPECT_EQ(parse_vector3(" 0.3 , -0 , 0.2 "), Vector3(0.3, 0, 0.2));
  EXPECT_THROW(parse_vector3("1,2"), ParseError);
  EXPECT_THROW(parse_vector3("1,2,3,4"), ParseError);
}

TEST(ParseObservable, Forms) {
  const auto a = parse_observable("2;1,2,2");
  EXPECT_EQ(a.a0, 2.0);
  EXPECT_EQ(a.avec, Vector3(1, 2, 2));
  EXPECT_THROW(parse_observable("1,2,2"), ParseError);
  EXPECT_THROW(parse_observable("1;2;1,2,2"), ParseError);
}

TEST(ParseQubitState, StrictSingleLine) {
  EXPECT_EQ(parse_qubit_state("\n0.1 0 -0.2\n\n").bloch(), Vector3(0.1, 0, -0.2));
  EXPECT_THROW(parse_qubit_state("0.1 0"), ParseError);
  EXPECT_THROW(parse_qubit_state("0 0 0\n0 0 0"), ParseError);
  EXPECT_THROW(parse_qubit_state("0.5 0.5 0"), DomainError);
}

TEST(ParseBlochMatrix, StrictFourByFour) {
  const auto bm = parse_bloch_matrix("1 0 0 0\n0 1 0 0\n0 0 -1 0\n0 0 0 1\n");
  EXPECT_EQ(bm.correlation().diagonal(), Vector3(1, -1, 1));
  EXPECT_THROW(parse_bloch_matrix("1 0 0 0\n0 0 0 0\n0 0 0 0\n"), ParseError);
  EXPECT_THROW(parse_bloch_matrix("1 0 0 0\n0 0 0 0\n0 0 0\n0 0 0 0\n"), ParseError);
  EXPECT_THROW(parse_bloch_matrix("0.5 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n"), ParseError);
  EXPECT_THROW(parse_bloch_matrix("1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n"), DomainError);
}

TEST(Formatting, RoundTripsAtFullPrecision) {
  const Sampler sampler(2);
  for (std::uint64_t k = 0; k < 50; ++k) {
    const auto q = sampler.qubit_state(k);
    EXPECT_EQ(parse_qubit_state(format_qubit_state(q)).bloch(), q.bloch());
    const auto bm = sampler.two_qubit_state(k);
    EXPECT_EQ(parse_bloch_matrix(format_bloch_matrix(bm)).array(), bm.array());
  }
}

TEST(Files, WriteThenRead) {
  const auto path = std::filesystem::temp_directory_path() / "fuzzybit_support_test.txt";
  write_text_file(path, "0 0 0.5\n");
  EXPECT_EQ(read_text_file(path), "0 0 0.5\n");
  std::filesystem::remove(path);
  EXPECT_THROW(read_text_file(path), ParseError);
}

TEST(Report, TextLayout) {
  Report r;
  r.add(make_check("alpha", true, 1e-17, "w=1"));
  r.add(make_info("beta", -0.0));
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.to_text(), "alpha PASS margin=1e-17 witness=w=1\nbeta INFO margin=0\n");
  r.add(make_check("gamma", false, 0.5));
  EXPECT_FALSE(r.all_pass());
  Report outer;
  outer.append(r, "suite/");
  ASSERT_NE(outer.find("suite/gamma"), nullptr);
  EXPECT_EQ(outer.find("gamma"), nullptr);
}

TEST(Report, NumberFormatting) {
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(0.1, 17), "0.10000000000000001");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333333");
}

TEST(Tolerances, OverridesByName) {
  Tolerances tol;
  set_tolerance(tol, "oracle", 1e-9);
  EXPECT_EQ(tol.oracle, 1e-9);
  set_tolerance(tol, "torus_oracle", 0.0);
  EXPECT_EQ(tol.torus_oracle, 0.0);
  EXPECT_THROW(set_tolerance(tol, "nonsense", 1.0), ParseError);
  EXPECT_THROW(set_tolerance(tol, "oracle", -1.0), DomainError);
  EXPECT_THROW(set_tolerance(tol, "oracle", NAN), DomainError);
  EXPECT_EQ(tolerance_names().size(), 24u);
  std::set<std::string_view> unique(tolerance_names().begin(), tolerance_names().end());
  EXPECT_EQ(unique.size(), tolerance_names().size());
}

TEST(Sampler, DeterministicPerSeedAndIndex) {
  const Sampler a(42), b(42), c(43);
  EXPECT_EQ(a.qubit_state(17).bloch(), b.qubit_state(17).bloch());
  EXPECT_NE(a.qubit_state(17).bloch(), c.qubit_state(17).bloch());
  EXPECT_NE(a.qubit_state(17).bloch(), a.qubit_state(18).bloch());
  EXPECT_NE(a.unit_vector(5, Stream::Axis), a.unit_vector(5, Stream::SecondAxis));
  EXPECT_EQ(Sampler().seed(), kDefaultSeed);
  EXPECT_EQ(kDefaultSeed, 0xF0221B17u);
}

TEST(Sampler, QubitStatesFillTheBall) {
  const Sampler s;
  int pure = 0;
  for (std::uint64_t k = 0; k < 400; ++k) {
    const auto q = s.qubit_state(k);
    EXPECT_LE(q.radius(), 0.5 + 1e-15);
    if (q.is_pure()) ++pure;
    if (k % 4 == 0) EXPECT_TRUE(q.is_pure());
  }
  EXPECT_EQ(pure, 100);
}

TEST(Sampler, UnitVectorsAndRotations) {
  const Sampler s;
  for (std::uint64_t k = 0; k < 200; ++k) {
    EXPECT_NEAR(s.unit_vector(k).norm(), 1.0, 1e-15);
    const Matrix3 r = s.rotation(k);
    EXPECT_LE((r * r.transpose() - Matrix3::Identity()).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_NEAR(r.determinant(), 1.0, 1e-14);
  }
}

TEST(Sampler, DensityMatricesCoverAllRanks) {
  const Sampler s;
  for (std::uint64_t k = 0; k < 40; ++k) {
    const auto rho = s.density_matrix(k);
    EXPECT_TRUE(rho.is_hermitian(1e-15));
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-14);
    const auto eig = hermitian_eigen(rho);
    int rank = 0;
    for (double v : eig.eigenvalues) {
      EXPECT_GE(v, -1e-14);
      if (v > 1e-10) ++rank;
    }
    EXPECT_EQ(rank, static_cast<int>(1 + k % 4));
  }
}

TEST(Sampler, QutritStatesAndProjectors) {
  const Sampler s;
  for (std::uint64_t k = 0; k < 60; ++k) {
    EXPECT_TRUE(is_qutrit(s.qutrit_state(k).underlying()));
    for (int dim : {2, 4}) {
      const auto p = s.projector(k, dim);
      EXPECT_EQ(p.dim(), dim);
      EXPECT_LE(max_abs_diff(p.matrix() * p.matrix(), p.matrix()), 1e-12);
    }
  }
}

}  // namespace
}  // namespace fuzzybit
