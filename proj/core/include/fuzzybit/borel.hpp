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

// Borel subsets of the real line restricted to finite unions of half-open
// intervals [lo, hi) and isolated points. A projector only sees which
// eigenvalues a set contains, so this family is enough.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzybit/tolerances.hpp"

namespace fuzzybit {

/// [lo, hi); lo may be -inf and hi +inf.
struct Interval {
  double lo;
  double hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

class BorelSet {
 public:
  BorelSet() = default;  // empty set

  static BorelSet empty() { return {}; }
  static BorelSet real_line();
  static BorelSet interval(double lo, double hi);
  static BorelSet point(double p);

  /// Parses `[lo,hi)`, `{p}` or `{p,q,...}` terms joined by `u` or `|`.
  /// `R` is the real line, `{}` the empty set, endpoints accept `inf`/`-inf`.
  static BorelSet parse(std::string_view text);

  bool contains(double x) const;
  bool is_empty() const { return intervals_.empty() && points_.empty(); }

  /// Complement in R. Only defined for sets without isolated points (the
  /// complement of a point is not a finite union of half-open intervals);
  /// DomainError otherwise.
  BorelSet complement() const;

  /// Normal form: sorted, disjoint, adjacent intervals merged, points not
  /// covered by any interval.
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  const std::vector<double>& points() const noexcept { return points_; }

  std::string to_string() const;

  friend BorelSet unite(const BorelSet& a, const BorelSet& b);
  friend bool operator==(const BorelSet&, const BorelSet&) = default;

 private:
  void normalize();

  std::vector<Interval> intervals_;
  std::vector<double> points_;
};

BorelSet unite(const BorelSet& a, const BorelSet& b);

/// Eigenvalues deduplicated within tol.eigen_dedup, ascending, each marked by
/// whether the Borel set contains it.
struct EigenSelection {
  std::vector<double> eigenvalues;
  std::vector<bool> mask;

  std::size_t size() const noexcept { return mask.size(); }
  std::size_t selected_count() const;
};

/// Sorts and merges eigenvalues closer than tol.eigen_dedup.
std::vector<double> distinct_eigenvalues(std::span<const double> eigenvalues,
                                         const Tolerances& tol = kTolerances);

EigenSelection classify(const BorelSet& e, std::span<const double> eigenvalues,
                        const Tolerances& tol = kTolerances);

/// The four qubit classes with respect to (lambda_-, lambda_+).
enum class QubitClass {
  None,   // E_0: neither eigenvalue
  Plus,   // E_+: lambda_+ only
  Minus,  // E_-: lambda_- only
  Both,   // E_±: both (or the single degenerate eigenvalue)
};

/// Maps a qubit selection (one or two distinct eigenvalues) to its class.
/// DomainError for any other size.
QubitClass qubit_class(const EigenSelection& sel);

/// Two-qubit Borel types 1..6 from the per-factor classes: 1 no eigenvalue,
/// 2 one, 3 both of one factor only, 4 one of each factor, 5 three, 6 all four.
enum class BorelType { NoEigenvalue = 1, One, SameSubsystem, OneEach, Three, All };

BorelType two_qubit_type(QubitClass a, QubitClass b);

/// Text tags: "0", "+", "-", "pm".
std::string_view to_string(QubitClass c);
QubitClass parse_qubit_class(std::string_view text);

}  // namespace fuzzybit
