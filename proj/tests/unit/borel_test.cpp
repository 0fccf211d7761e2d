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

#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "fuzzybit/borel.hpp"
#include "fuzzybit/error.hpp"
#include "fuzzybit/linalg.hpp"

namespace fuzzybit {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(BorelContains, HalfOpenInterval) {
  const auto e = BorelSet::interval(0, 1);
  EXPECT_TRUE(e.contains(0.0));
  EXPECT_FALSE(e.contains(1.0));
  EXPECT_FALSE(e.contains(-1e-300));
}

TEST(BorelContains, SingletonUnionInterval) {
  const auto e = unite(BorelSet::point(5), BorelSet::interval(0, 1));
  EXPECT_TRUE(e.contains(5.0));
  EXPECT_TRUE(e.contains(0.5));
  EXPECT_FALSE(e.contains(4.999));
  EXPECT_EQ(e, BorelSet::parse("[0,1)u{5}"));
}

TEST(BorelParse, AcceptedForms) {
  EXPECT_EQ(BorelSet::parse("R"), BorelSet::real_line());
  EXPECT_TRUE(BorelSet::parse("{}").is_empty());
  EXPECT_EQ(BorelSet::parse("[-inf, 0) | [0, inf)"), BorelSet::real_line());
  EXPECT_EQ(BorelSet::parse("{3,1,3}").points(), (std::vector<double>{1, 3}));
  EXPECT_EQ(BorelSet::parse(" [2,3) U [0,1) ").intervals().front(), (Interval{0, 1}));
}

TEST(BorelParse, Rejections) {
  for (const char* bad : {"", "[0,1", "[1,0)", "[0,1,2)", "{1,}", "[0,1)u", "x", "[0,1)[1,2)",
                          "{inf}", "[a,1)"}) {
    EXPECT_THROW(BorelSet::parse(bad), ParseError) << '"' << bad << '"';
  }
}

TEST(BorelNormalForm, MergesAdjacentAndOverlapping) {
  const auto e = BorelSet::parse("[1,2)u[0,1)u[1.5,3)");
  ASSERT_EQ(e.intervals().size(), 1u);
  EXPECT_EQ(e.intervals()[0], (Interval{0, 3}));
}

TEST(BorelNormalForm, CoveredPointsDropButRightEndpointsStay) {
  const auto e = BorelSet::parse("[0,1)u{0,0.5,1}");
  EXPECT_EQ(e.points(), (std::vector<double>{1}));
  EXPECT_TRUE(e.contains(1.0));
}

TEST(BorelNormalForm, ToStringRoundTrip) {
  for (const char* text : {"[0,1)u{5}", "[-inf,-2)u[0.25,inf)", "{}", "{-1,2}"}) {
    const auto e = BorelSet::parse(text);
    EXPECT_EQ(BorelSet::parse(e.to_string()), e) << text;
  }
  EXPECT_EQ(BorelSet::parse("[0,1)u{5}").to_string(), "[0,1)u{5}");
}

TEST(BorelComplement, PartitionsTheLine) {
  const auto e = BorelSet::parse("[-2,0)u[1,3)");
  const auto c = e.complement();
  for (double x : {-5.0, -2.0, -1.0, 0.0, 0.5, 1.0, 2.9, 3.0, 10.0}) {
    EXPECT_NE(e.contains(x), c.contains(x)) << x;
  }
  EXPECT_EQ(c.complement(), e);
  EXPECT_EQ(BorelSet::real_line().complement(), BorelSet::empty());
  EXPECT_THROW(BorelSet::point(1).complement(), DomainError);
}

TEST(Classify, PlusClassForSigma3) {
  const std::vector<double> ev{-1, 1};
  const auto sel = classify(BorelSet::interval(0, 3), ev);
  EXPECT_EQ(sel.mask, (std::vector<bool>{false, true}));
  EXPECT_EQ(qubit_class(sel), QubitClass::Plus);
}

TEST(Classify, RealLineSelectsEverything) {
  const std::vector<double> ev{-1, 1};
  const auto sel = classify(BorelSet::real_line(), ev);
  EXPECT_EQ(sel.mask, (std::vector<bool>{true, true}));
  EXPECT_EQ(qubit_class(sel), QubitClass::Both);
}

TEST(Classify, FarIntervalMissesComputedEigenvalues) {
  const auto eig = hermitian_eigen(pauli_combination(2.0, Vector3(1, 2, 2)));
  const auto sel = classify(BorelSet::interval(10, 11), eig.eigenvalues);
  EXPECT_EQ(sel.mask, (std::vector<bool>{false, false}));
  EXPECT_EQ(qubit_class(sel), QubitClass::None);
}

TEST(Classify, DegenerateEigenvaluesCollapse) {
  const std::vector<double> ev{0.5, 0.5 + 1e-13};
  const auto sel = classify(BorelSet::interval(0, 1), ev);
  EXPECT_EQ(sel.size(), 1u);
  EXPECT_EQ(qubit_class(sel), QubitClass::Both);
  EXPECT_EQ(qubit_class(classify(BorelSet::interval(2, 3), ev)), QubitClass::None);
}

TEST(Classify, MonotoneUnderInclusion) {
  const std::vector<double> ev{-1.5, 0.0, 0.25, 2.0};
  const std::vector<BorelSet> chain{BorelSet::empty(), BorelSet::point(0.25),
                                    BorelSet::parse("[0,0.5)"), BorelSet::parse("[0,0.5)u[2,3)"),
                                    BorelSet::parse("[-2,0.5)u[2,3)"), BorelSet::real_line()};
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const auto small = classify(chain[k - 1], ev);
    const auto big = classify(chain[k], ev);
    for (std::size_t i = 0; i < ev.size(); ++i) EXPECT_LE(small.mask[i], big.mask[i]);
  }
}

TEST(Classify, ComplementNegatesMask) {
  const std::vector<double> ev{-3.0, -1.0, 0.5, 4.0};
  const auto e = BorelSet::parse("[-inf,-2)u[0,1)");
  const auto a = classify(e, ev);
  const auto b = classify(e.complement(), ev);
  for (std::size_t i = 0; i < ev.size(); ++i) EXPECT_NE(a.mask[i], b.mask[i]);
}

TEST(TwoQubitType, AllSixTypes) {
  using Q = QubitClass;
  EXPECT_EQ(two_qubit_type(Q::None, Q::None), BorelType::NoEigenvalue);
  EXPECT_EQ(two_qubit_type(Q::Plus, Q::None), BorelType::One);
  EXPECT_EQ(two_qubit_type(Q::None, Q::Both), BorelType::SameSubsystem);
  EXPECT_EQ(two_qubit_type(Q::Minus, Q::Plus), BorelType::OneEach);
  EXPECT_EQ(two_qubit_type(Q::Both, Q::Minus), BorelType::Three);
  EXPECT_EQ(two_qubit_type(Q::Both, Q::Both), BorelType::All);
}

TEST(QubitClassText, RoundTrip) {
  for (auto c : {QubitClass::None, QubitClass::Plus, QubitClass::Minus, QubitClass::Both}) {
    EXPECT_EQ(parse_qubit_class(to_string(c)), c);
  }
  EXPECT_EQ(parse_qubit_class("*"), QubitClass::Both);
  EXPECT_THROW(parse_qubit_class("++"), ParseError);
}

TEST(BorelSet, IntervalRejectsBadEndpoints) {
  EXPECT_THROW(BorelSet::interval(kInf, kInf), DomainError);
  EXPECT_TRUE(BorelSet::interval(1, 1).is_empty());
  EXPECT_THROW(BorelSet::point(kInf), DomainError);
}

}  // namespace
}  // namespace fuzzybit
