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

#include "fuzzybit/fuzzylogic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <fmt/format.h>

#include "fuzzybit/error.hpp"

namespace fuzzybit {

struct Functional::Node {
  Node(Kind k, System sys, int c = 0) : kind(k), system(sys), constant(c) {}
  Kind kind;
  System system;
  int constant = 0;
  Vector3 a = Vector3::Zero();
  Vector3 b = Vector3::Zero();
  QubitClass ca = QubitClass::None;
  QubitClass cb = QubitClass::None;
  std::vector<Functional> children;
};

namespace {

using Table = std::vector<std::vector<double>>;

std::string vec_text(const Vector3& v) {
  return fmt::format("({},{},{})", format_number(v[0]), format_number(v[1]), format_number(v[2]));
}

ComplexMatrix pure_density(const ComplexVector& v) { return ComplexMatrix(v * v.adjoint()); }

ComplexVector basis_vector(int k) {
  ComplexVector v = ComplexVector::Zero(4);
  v[k] = 1.0;
  return v;
}

Table value_table(const std::vector<Functional>& family, const StateUniverse& u) {
  Table t(family.size(), std::vector<double>(u.size()));
  for (std::size_t m = 0; m < family.size(); ++m) {
    for (std::size_t s = 0; s < u.size(); ++s) t[m][s] = family[m](u.states()[s]);
  }
  return t;
}

double sup_diff(const std::vector<double>& x, const std::vector<double>& y) {
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

void require_same_system(const Functional& f, const Functional& g) {
  if (f.system() != g.system()) throw DomainError("functionals live on different universes");
}

// Index of the family member matching `values`, or -1.
int find_member(const Table& t, const std::vector<double>& values, double tol, double* best) {
  *best = std::numeric_limits<double>::infinity();
  int found = -1;
  for (std::size_t m = 0; m < t.size(); ++m) {
    const double d = sup_diff(t[m], values);
    if (d < *best) *best = d;
    if (found < 0 && d <= tol) found = static_cast<int>(m);
  }
  return found;
}

std::vector<Functional> axis_functionals(const StateUniverse& u, std::size_t count) {
  const Sampler sampler(u.seed());
  std::vector<Functional> fs;
  for (std::size_t i = 0; i < count; ++i) {
    if (u.system() == System::Qubit) {
      fs.push_back(Functional::qubit(sampler.unit_vector(i, Stream::Axis), QubitClass::Plus));
    } else {
      fs.push_back(Functional::two_qubit(sampler.unit_vector(i, Stream::Axis),
                                         sampler.unit_vector(i, Stream::SecondAxis),
                                         QubitClass::Plus, QubitClass::Plus));
    }
  }
  return fs;
}

}  // namespace

std::string_view to_string(System s) { return s == System::Qubit ? "qubit" : "twoqubit"; }

System parse_system(std::string_view text) {
  if (text == "qubit") return System::Qubit;
  if (text == "twoqubit") return System::TwoQubit;
  throw ParseError(fmt::format("unknown system '{}' (expected qubit or twoqubit)", text));
}

System system_of(const State& s) {
  return std::holds_alternative<QubitState>(s) ? System::Qubit : System::TwoQubit;
}

std::string describe(const State& s) {
  if (const auto* q = std::get_if<QubitState>(&s)) return fmt::format("rho={}", vec_text(q->bloch()));
  const auto& bm = std::get<BlochMatrix>(s);
  const Matrix3& R = bm.correlation();
  return fmt::format("s={},r={},Rdiag={}", vec_text(bm.s()), vec_text(bm.r()),
                     vec_text(R.diagonal()));
}

Functional Functional::constant(int c, System system) {
  if (c != 0 && c != 1) throw DomainError("constant functionals are 0 or 1");
  return Functional(std::make_shared<const Node>(Node(Kind::Constant, system, c)));
}

Functional Functional::qubit(const Vector3& ahat, QubitClass c) {
  if (c == QubitClass::Plus || c == QubitClass::Minus) require_unit(ahat);
  Node n{Kind::Qubit, System::Qubit};
  n.a = ahat;
  n.ca = c;
  return Functional(std::make_shared<const Node>(std::move(n)));
}

Functional Functional::two_qubit(const Vector3& ahat, const Vector3& bhat, QubitClass a,
                                 QubitClass b) {
  if (a == QubitClass::Plus || a == QubitClass::Minus) require_unit(ahat);
  if (b == QubitClass::Plus || b == QubitClass::Minus) require_unit(bhat);
  Node n{Kind::TwoQubit, System::TwoQubit};
  n.a = ahat;
  n.b = bhat;
  n.ca = a;
  n.cb = b;
  return Functional(std::make_shared<const Node>(std::move(n)));
}

Functional Functional::complement(const Functional& f) {
  Node n{Kind::Complement, f.system()};
  n.children = {f};
  return Functional(std::make_shared<const Node>(std::move(n)));
}

Functional Functional::bold_union(std::vector<Functional> fs, System system) {
  for (const auto& f : fs) {
    if (f.system() != system) throw DomainError("functionals live on different universes");
  }
  Node n{Kind::BoldUnion, system};
  n.children = std::move(fs);
  return Functional(std::make_shared<const Node>(std::move(n)));
}

#define FUZZYBIT_PAIR_CONNECTIVE(NAME, KIND)                                      \
  Functional Functional::NAME(const Functional& f, const Functional& g) {        \
    require_same_system(f, g);                                                   \
    Node n{Kind::KIND, f.system()};                                              \
    n.children = {f, g};                                                         \
    return Functional(std::make_shared<const Node>(std::move(n)));               \
  }
FUZZYBIT_PAIR_CONNECTIVE(bold_intersection, BoldIntersection)
FUZZYBIT_PAIR_CONNECTIVE(zadeh_union, ZadehUnion)
FUZZYBIT_PAIR_CONNECTIVE(zadeh_intersection, ZadehIntersection)
#undef FUZZYBIT_PAIR_CONNECTIVE

Functional::Kind Functional::kind() const { return node_->kind; }
System Functional::system() const { return node_->system; }

double Functional::operator()(const State& s) const {
  if (system_of(s) != node_->system) {
    throw DomainError(fmt::format("a {} functional cannot be evaluated on a {} state",
                                  to_string(node_->system), to_string(system_of(s))));
  }
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Constant: return n.constant;
    case Kind::Qubit: return membership_qubit(n.a, std::get<QubitState>(s), n.ca);
    case Kind::TwoQubit: return membership_two(n.a, n.b, std::get<BlochMatrix>(s), n.ca, n.cb);
    case Kind::Complement: return 1.0 - n.children[0](s);
    case Kind::BoldUnion: {
      double sum = 0.0;
      for (const auto& c : n.children) sum += c(s);
      return std::min(sum, 1.0);
    }
    case Kind::BoldIntersection: return std::max(n.children[0](s) + n.children[1](s) - 1.0, 0.0);
    case Kind::ZadehUnion: return std::max(n.children[0](s), n.children[1](s));
    case Kind::ZadehIntersection: return std::min(n.children[0](s), n.children[1](s));
  }
  throw Error("unreachable functional kind");
}

std::string Functional::describe() const {
  const Node& n = *node_;
  const auto list = [&](std::string_view op) {
    std::string out = fmt::format("{}(", op);
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      if (i > 0) out += ',';
      out += n.children[i].describe();
    }
    return out + ')';
  };
  switch (n.kind) {
    case Kind::Constant: return std::to_string(n.constant);
    case Kind::Qubit: return fmt::format("f[{}]{}", to_string(n.ca), vec_text(n.a));
    case Kind::TwoQubit:
      return fmt::format("f[{}{}]{}{}", to_string(n.ca), to_string(n.cb), vec_text(n.a), vec_text(n.b));
    case Kind::Complement: return list("not");
    case Kind::BoldUnion: return list("bold_or");
    case Kind::BoldIntersection: return list("bold_and");
    case Kind::ZadehUnion: return list("max");
    case Kind::ZadehIntersection: return list("min");
  }
  return "?";
}

bool Functional::structurally_equal(const Functional& other) const {
  const Node& x = *node_;
  const Node& y = *other.node_;
  if (&x == &y) return true;
  if (x.kind != y.kind || x.system != y.system || x.constant != y.constant || x.ca != y.ca ||
      x.cb != y.cb || x.a != y.a || x.b != y.b || x.children.size() != y.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < x.children.size(); ++i) {
    if (!x.children[i].structurally_equal(y.children[i])) return false;
  }
  return true;
}

double evaluate(const Functional& f, const State& s) { return f(s); }

StateUniverse StateUniverse::sampled(System system, std::size_t samples, std::uint64_t seed) {
  StateUniverse u(system, seed);
  const Sampler sampler(seed);
  if (system == System::Qubit) {
    u.states_.emplace_back(QubitState::maximally_mixed());
    for (int axis = 0; axis < 3; ++axis) {
      for (double sign : {1.0, -1.0}) {
        u.states_.emplace_back(QubitState::from_bloch(0.5 * sign * Vector3::Unit(axis)));
      }
    }
    for (std::size_t i = 0; i < samples; ++i) u.states_.emplace_back(sampler.qubit_state(i));
  } else {
    u.states_.emplace_back(BlochMatrix::maximally_mixed());
    for (int k = 0; k < 4; ++k) {
      u.states_.emplace_back(BlochMatrix::from_density(pure_density(basis_vector(k))));
    }
    const double h = 0.70710678118654752440;
    for (const auto& [i, j, sign] : {std::tuple{0, 3, 1.0}, {0, 3, -1.0}, {1, 2, 1.0}, {1, 2, -1.0}}) {
      ComplexVector v = ComplexVector::Zero(4);
      v[i] = h;
      v[j] = sign * h;
      u.states_.emplace_back(BlochMatrix::from_density(pure_density(v)));
    }
    for (std::size_t i = 0; i < samples; ++i) u.states_.emplace_back(sampler.two_qubit_state(i));
  }
  return u;
}

double sup_distance(const Functional& f, const Functional& g, const StateUniverse& u) {
  require_same_system(f, g);
  double d = 0.0;
  for (const auto& s : u.states()) d = std::max(d, std::abs(f(s) - g(s)));
  return d;
}

bool equivalent(const Functional& f, const Functional& g, const StateUniverse& u,
                const Tolerances& tol) {
  return f.structurally_equal(g) || sup_distance(f, g, u) <= tol.functional_equality;
}

Disjointness weakly_disjoint(const Functional& f, const Functional& g, const StateUniverse& u,
                             const Tolerances& tol) {
  require_same_system(f, g);
  Disjointness d;
  d.worst = -std::numeric_limits<double>::infinity();
  std::size_t arg = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double v = f(u.states()[i]) + g(u.states()[i]) - 1.0;
    if (v > d.worst) {
      d.worst = v;
      arg = i;
    }
  }
  d.disjoint = d.worst <= tol.weak_disjointness;
  if (!d.disjoint) d.witness = u.states()[arg];
  return d;
}

Report orthogonality_postulate_check(const std::vector<Functional>& family,
                                     const StateUniverse& u, const Tolerances& tol) {
  const Table t = value_table(family, u);
  const double eps = tol.weak_disjointness;
  Report report;

  double pair_worst = -std::numeric_limits<double>::infinity();
  std::string pair_witness = "vacuous";
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      for (std::size_t s = 0; s < u.size(); ++s) {
        const double v = t[i][s] + t[j][s];
        if (v > pair_worst) {
          pair_worst = v;
          pair_witness = fmt::format("{}+{}={}@{}", family[i].describe(), family[j].describe(),
                                     format_number(v), describe(u.states()[s]));
        }
      }
    }
  }
  const bool pairwise = family.size() < 2 || pair_worst <= 1.0 + eps;
  report.add(make_check("pairwise_orthogonal", pairwise, family.size() < 2 ? 1.0 : 1.0 - pair_worst,
                        pair_witness));

  double sum_worst = -std::numeric_limits<double>::infinity();
  std::string sum_witness;
  for (std::size_t s = 0; s < u.size(); ++s) {
    double sum = 0.0;
    for (std::size_t m = 0; m < family.size(); ++m) sum += t[m][s];
    if (sum > sum_worst) {
      sum_worst = sum;
      sum_witness = fmt::format("sum={}@{}", format_number(sum), describe(u.states()[s]));
    }
  }
  // A one element sequence is orthogonal by definition.
  const bool orthogonal = family.size() <= 1 || sum_worst <= 1.0 + eps;
  report.add(make_check("orthogonal", orthogonal, 1.0 - sum_worst, sum_witness));
  report.add(make_check("orthogonality_postulate", !pairwise || orthogonal, 1.0 - sum_worst));
  return report;
}

Report pykacz_family_check(const std::vector<Functional>& family, const StateUniverse& u,
                           const Tolerances& tol) {
  if (family.size() > 16) throw DomainError("pykacz_family_check handles at most 16 members");
  const Table t = value_table(family, u);
  const double eq = tol.functional_equality;
  const std::size_t n = family.size();
  const std::vector<double> zero(u.size(), 0.0);
  Report report;

  double best = 0.0;
  const int empty = find_member(t, zero, eq, &best);
  report.add(make_check("property1_empty", empty >= 0, n == 0 ? 0.0 : best,
                        empty >= 0 ? family[static_cast<std::size_t>(empty)].describe() : "no member is 0"));

  double worst2 = 0.0;
  std::string missing2;
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<double> c(u.size());
    for (std::size_t s = 0; s < u.size(); ++s) c[s] = 1.0 - t[m][s];
    if (find_member(t, c, eq, &best) < 0 && missing2.empty()) {
      missing2 = fmt::format("not({})", family[m].describe());
    }
    worst2 = std::max(worst2, best);
  }
  report.add(make_check("property2_complement", missing2.empty(), worst2,
                        missing2.empty() ? "" : missing2));

  std::vector<std::vector<bool>> disjoint(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double w = -1.0;
      for (std::size_t s = 0; s < u.size(); ++s) w = std::max(w, t[i][s] + t[j][s] - 1.0);
      disjoint[i][j] = w <= tol.weak_disjointness;
    }
  }
  // Depth-first over cliques of the weak-disjointness graph, carrying sums.
  std::size_t checked = 0;
  double worst3 = 0.0;
  std::string missing3;
  std::vector<std::size_t> clique;
  std::function<void(std::size_t, const std::vector<double>&)> extend =
      [&](std::size_t start, const std::vector<double>& sum) {
        for (std::size_t j = start; j < n; ++j) {
          if (!std::all_of(clique.begin(), clique.end(), [&](std::size_t i) { return disjoint[i][j]; })) {
            continue;
          }
          std::vector<double> next(u.size());
          for (std::size_t s = 0; s < u.size(); ++s) next[s] = sum[s] + t[j][s];
          clique.push_back(j);
          if (clique.size() >= 2) {
            ++checked;
            std::vector<double> bold(u.size());
            for (std::size_t s = 0; s < u.size(); ++s) bold[s] = std::min(next[s], 1.0);
            if (find_member(t, bold, eq, &best) < 0 && missing3.empty()) {
              missing3 = "bold_or(";
              for (std::size_t k = 0; k < clique.size(); ++k) {
                missing3 += (k ? "," : "") + family[clique[k]].describe();
              }
              missing3 += ')';
            }
            worst3 = std::max(worst3, best);
          }
          extend(j + 1, next);
          clique.pop_back();
        }
      };
  extend(0, zero);
  report.add(make_check("property3_bold_union", missing3.empty(), worst3,
                        missing3.empty() ? fmt::format("subfamilies={}", checked) : missing3));

  std::string bad4;
  for (std::size_t m = 0; m < n && bad4.empty(); ++m) {
    double self_meet = 0.0;
    for (std::size_t s = 0; s < u.size(); ++s) self_meet = std::max(self_meet, 2.0 * t[m][s] - 1.0);
    if (self_meet <= eq && sup_diff(t[m], zero) > eq) bad4 = family[m].describe();
  }
  report.add(make_check("property4_self_disjoint_is_empty", bad4.empty(), 0.0, bad4));
  return report;
}

Report law_survey(const StateUniverse& u, std::size_t count, const Tolerances& tol) {
  const std::vector<Functional> fs = axis_functionals(u, count);
  const std::vector<State>& states = u.states();
  Report report;

  double em = 0.0, contra = 0.0, involution = 0.0, de_morgan = 0.0;
  double zadeh_em_min = std::numeric_limits<double>::infinity();
  double zadeh_contra_max = -std::numeric_limits<double>::infinity();
  std::string zadeh_em_witness, zadeh_contra_witness;
  for (const auto& f : fs) {
    const Functional fc = Functional::complement(f);
    const Functional bold_or = Functional::bold_union({f, fc}, u.system());
    const Functional bold_and = Functional::bold_intersection(f, fc);
    const Functional z_or = Functional::zadeh_union(f, fc);
    const Functional z_and = Functional::zadeh_intersection(f, fc);
    const Functional twice = Functional::complement(fc);
    for (const auto& g : fs) {
      const Functional lhs = Functional::complement(Functional::bold_union({f, g}, u.system()));
      const Functional rhs = Functional::bold_intersection(fc, Functional::complement(g));
      for (const auto& s : states) de_morgan = std::max(de_morgan, std::abs(lhs(s) - rhs(s)));
    }
    for (const auto& s : states) {
      em = std::max(em, std::abs(bold_or(s) - 1.0));
      contra = std::max(contra, std::abs(bold_and(s)));
      involution = std::max(involution, std::abs(twice(s) - f(s)));
      const double zo = z_or(s);
      if (zo < zadeh_em_min) {
        zadeh_em_min = zo;
        zadeh_em_witness = fmt::format("value={}@{}", format_number(zo), describe(s));
      }
      const double za = z_and(s);
      if (za > zadeh_contra_max) {
        zadeh_contra_max = za;
        zadeh_contra_witness = fmt::format("value={}@{}", format_number(za), describe(s));
      }
    }
  }
  report.add(make_check("bold_excluded_middle", em == 0.0, em));
  report.add(make_check("bold_contradiction", contra == 0.0, contra));
  report.add(make_check("zadeh_excluded_middle_violated", zadeh_em_min < 1.0 - tol.functional_equality,
                        1.0 - zadeh_em_min, zadeh_em_witness));
  report.add(make_check("zadeh_contradiction_violated", zadeh_contra_max > tol.functional_equality,
                        zadeh_contra_max, zadeh_contra_witness));

  // Distributivity on all triples, evaluated pointwise.
  double zadeh_gap = 0.0, bold_gap = 0.0;
  std::string bold_witness;
  for (std::size_t s = 0; s < states.size(); ++s) {
    std::vector<double> v(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) v[i] = fs[i](states[s]);
    for (double a : v) {
      for (double b : v) {
        for (double c : v) {
          const double zl = std::min(a, std::max(b, c));
          const double zr = std::max(std::min(a, b), std::min(a, c));
          zadeh_gap = std::max(zadeh_gap, std::abs(zl - zr));
          const double bl = std::max(a + std::min(b + c, 1.0) - 1.0, 0.0);
          const double br = std::min(std::max(a + b - 1.0, 0.0) + std::max(a + c - 1.0, 0.0), 1.0);
          if (std::abs(bl - br) > bold_gap) {
            bold_gap = std::abs(bl - br);
            bold_witness = fmt::format("a={},b={},c={},lhs={},rhs={}", format_number(a),
                                       format_number(b), format_number(c), format_number(bl),
                                       format_number(br));
          }
        }
      }
    }
  }
  report.add(make_check("zadeh_distributivity", zadeh_gap == 0.0, zadeh_gap));
  report.add(make_check("bold_distributivity_violated", bold_gap > tol.functional_equality, bold_gap,
                        bold_witness));

  report.add(make_check("complement_involutive", involution <= 1e-15, involution));
  report.add(make_check("bold_de_morgan", de_morgan <= tol.functional_equality, de_morgan));

  // f ⊓ g <= f pointwise, so complements must reverse the order.
  double reversal = 0.0;
  for (const auto& f : fs) {
    for (const auto& g : fs) {
      const Functional meet = Functional::bold_intersection(f, g);
      const Functional cf = Functional::complement(f);
      const Functional cm = Functional::complement(meet);
      for (const auto& s : states) reversal = std::max(reversal, cf(s) - cm(s));
    }
  }
  report.add(make_check("complement_order_reversing", reversal <= 0.0, -reversal));

  // m_rho is additive on an orthogonal family.
  std::vector<Functional> family;
  if (u.system() == System::Qubit) {
    const Vector3 a = Sampler(u.seed()).unit_vector(0, Stream::Axis);
    family = {Functional::qubit(a, QubitClass::Plus), Functional::qubit(-a, QubitClass::Plus)};
  } else {
    const Sampler sampler(u.seed());
    const Vector3 a = sampler.unit_vector(0, Stream::Axis);
    const Vector3 b = sampler.unit_vector(0, Stream::SecondAxis);
    for (QubitClass ca : {QubitClass::Plus, QubitClass::Minus}) {
      for (QubitClass cb : {QubitClass::Plus, QubitClass::Minus}) {
        family.push_back(Functional::two_qubit(a, b, ca, cb));
      }
    }
  }
  const Functional joined = Functional::bold_union(family, u.system());
  double additivity = 0.0;
  for (const auto& s : states) {
    double sum = 0.0;
    for (const auto& f : family) sum += f(s);
    additivity = std::max(additivity, std::abs(sum - joined(s)));
  }
  report.add(make_check("measure_additivity", additivity <= tol.functional_equality, additivity));
  return report;
}

}  // namespace fuzzybit
