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

// Membership functionals on a universe of states and the fuzzy connectives
// built on them. A functional is an immutable expression tree; evaluation is
// recursive and pure.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fuzzybit/borel.hpp"
#include "fuzzybit/qubit.hpp"
#include "fuzzybit/report.hpp"
#include "fuzzybit/sampling.hpp"
#include "fuzzybit/twoqubit.hpp"

namespace fuzzybit {

enum class System { Qubit, TwoQubit };

std::string_view to_string(System s);
System parse_system(std::string_view text);

using State = std::variant<QubitState, BlochMatrix>;

System system_of(const State& s);
std::string describe(const State& s);

class Functional {
 public:
  enum class Kind {
    Constant,
    Qubit,
    TwoQubit,
    Complement,
    BoldUnion,
    BoldIntersection,
    ZadehUnion,
    ZadehIntersection,
  };

  /// c must be 0 or 1.
  static Functional constant(int c, System system);
  static Functional qubit(const Vector3& ahat, QubitClass c);
  static Functional two_qubit(const Vector3& ahat, const Vector3& bhat, QubitClass a,
                              QubitClass b);
  static Functional complement(const Functional& f);
  /// min(sum, 1) over any number of arguments; the empty union is 0.
  static Functional bold_union(std::vector<Functional> fs, System system);
  static Functional bold_intersection(const Functional& f, const Functional& g);
  static Functional zadeh_union(const Functional& f, const Functional& g);
  static Functional zadeh_intersection(const Functional& f, const Functional& g);

  Kind kind() const;
  System system() const;
  /// DomainError if the state belongs to another system.
  double operator()(const State& s) const;
  std::string describe() const;
  /// Same construction tree (axes compared exactly).
  bool structurally_equal(const Functional& other) const;

 private:
  struct Node;
  explicit Functional(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

double evaluate(const Functional& f, const State& s);

/// A finite sample of one system's state space: fixed anchor states (the
/// maximally mixed state first) followed by seeded random samples.
class StateUniverse {
 public:
  static StateUniverse sampled(System system, std::size_t samples, std::uint64_t seed = kDefaultSeed);

  System system() const noexcept { return system_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const std::vector<State>& states() const noexcept { return states_; }
  std::size_t size() const noexcept { return states_.size(); }

 private:
  StateUniverse(System system, std::uint64_t seed) : system_(system), seed_(seed) {}
  System system_;
  std::uint64_t seed_;
  std::vector<State> states_;
};

/// max over the universe of |f - g|.
double sup_distance(const Functional& f, const Functional& g, const StateUniverse& u);
/// Structural match, else sup distance within tol.functional_equality.
bool equivalent(const Functional& f, const Functional& g, const StateUniverse& u,
                const Tolerances& tol = kTolerances);

struct Disjointness {
  bool disjoint = false;
  double worst = 0.0;            // max of f + g - 1
  std::optional<State> witness;  // where the maximum is attained, when positive
  std::optional<bool> analytic;  // a = -b for two qubit E+ functionals
};

/// f ⊓ g = 0 on the universe.
Disjointness weakly_disjoint(const Functional& f, const Functional& g, const StateUniverse& u,
                             const Tolerances& tol = kTolerances);

Report orthogonality_postulate_check(const std::vector<Functional>& family,
                                     const StateUniverse& u, const Tolerances& tol = kTolerances);

/// Pykacz properties 1-4 on a finite family (at most 16 members).
Report pykacz_family_check(const std::vector<Functional>& family, const StateUniverse& u,
                           const Tolerances& tol = kTolerances);

/// Excluded middle, contradiction and distributivity for the bold and Zadeh
/// connectives on axis functionals drawn from the universe's seed. The
/// expected failures are reported as PASS when a witness is found.
Report law_survey(const StateUniverse& u, std::size_t functionals = 8,
                  const Tolerances& tol = kTolerances);

}  // namespace fuzzybit
