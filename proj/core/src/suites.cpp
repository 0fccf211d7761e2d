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

#include "fuzzybit/suites.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "fuzzybit/error.hpp"
#include "fuzzybit/gates.hpp"
#include "fuzzybit/linalg.hpp"
#include "fuzzybit/oracle.hpp"
#include "fuzzybit/qubit.hpp"
#include "fuzzybit/qutrit.hpp"
#include "fuzzybit/twoqubit.hpp"

namespace fuzzybit {
namespace {

// Offsets the sample index so two draws of the same stream stay independent.
constexpr std::uint64_t kSecondDraw = std::uint64_t{1} << 40;

// Largest value seen so far and the sample where it occurred.
struct Worst {
  double value = 0.0;
  std::size_t index = 0;
  bool seen = false;

  void update(double v, std::size_t i) {
    if (!seen || v > value) {
      value = v;
      index = i;
      seen = true;
    }
  }
  std::string where() const { return seen ? fmt::format("sample={}", index) : std::string{}; }
};

Check bound(std::string name, const Worst& w, double limit) {
  return make_check(std::move(name), w.value <= limit, w.value, w.where());
}

double max_diff(const Eigen::Matrix4d& a, const Eigen::Matrix4d& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

Observable2 random_observable(const Sampler& sampler, std::uint64_t i, Stream axis_stream) {
  const double a0 = sampler.uniform(i, Stream::Angle, -1.0, 1.0);
  const double scale = sampler.uniform(i + kSecondDraw, Stream::Angle, 0.5, 2.0);
  return {a0, scale * sampler.unit_vector(i, axis_stream)};
}

BorelSet borel_for(const Observable2& a, QubitClass c) {
  const auto [lo, hi] = eigenvalues2(a);
  return representative_borel_set(lo, hi, c);
}

std::array<Functional, 4> type4_family(const Vector3& a, const Vector3& b) {
  return {Functional::two_qubit(a, b, QubitClass::Plus, QubitClass::Plus),
          Functional::two_qubit(a, b, QubitClass::Plus, QubitClass::Minus),
          Functional::two_qubit(a, b, QubitClass::Minus, QubitClass::Plus),
          Functional::two_qubit(a, b, QubitClass::Minus, QubitClass::Minus)};
}

Report qubit_oracle(const SuiteOptions& o) {
  const Sampler sampler(o.seed);
  Worst diff, range, complement, rotation, projector;
  for (std::size_t i = 0; i < o.samples; ++i) {
    const Observable2 a = random_observable(sampler, i, Stream::Axis);
    const QubitClass c = sampler.qubit_class(i);
    const BorelSet e = borel_for(a, c);
    const QubitState s = sampler.qubit_state(i);
    const double f = membership_qubit(a, e, s, o.tol);
    diff.update(std::abs(f - oracle_membership_qubit(a, e, s.density_matrix(), o.tol)), i);
    range.update(std::max(-f, f - 1.0), i);
    projector.update(projector_distance(spectral_projector(a, e, o.tol),
                                        numeric_spectral_projector(a.matrix(), e, o.tol)), i);

    const Vector3 ahat = a.axis();
    const double plus = membership_qubit(ahat, s, QubitClass::Plus, o.tol);
    const double minus = membership_qubit(ahat, s, QubitClass::Minus, o.tol);
    const double flipped = membership_qubit(-ahat, s, QubitClass::Plus, o.tol);
    complement.update(std::max(std::abs(minus - (1.0 - plus)), std::abs(minus - flipped)), i);

    const Matrix3 rot = sampler.rotation(i);
    const Vector3 ra = rot * ahat;
    const QubitState rs = QubitState::from_bloch(rot * s.bloch(), o.tol);
    rotation.update(std::abs(membership_qubit(ra / ra.norm(), rs, QubitClass::Plus, o.tol) - plus), i);
  }
  Report r;
  r.add(bound("membership_vs_trace_oracle", diff, o.tol.oracle));
  r.add(bound("spectral_projector_vs_numeric", projector, o.tol.oracle));
  r.add(bound("membership_in_unit_interval", range, 0.0));
  r.add(bound("complement_identity", complement, o.tol.oracle));
  r.add(bound("rotation_invariance", rotation, o.tol.oracle));

  Worst angle;
  for (std::size_t i = 0; i < o.samples; ++i) {
    const double alpha = sampler.uniform(i, Stream::Angle, 0.0, std::numbers::pi);
    angle.update(std::abs(membership_pure_angle(alpha) -
                          membership_qubit(Vector3::UnitZ(), QubitState::from_angle(alpha),
                                           QubitClass::Plus, o.tol)),
                 i);
  }
  r.add(bound("pure_angle_form", angle, o.tol.oracle));
  return r;
}

Report two_qubit_oracle(const SuiteOptions& o) {
  const Sampler sampler(o.seed);
  Worst diff, range, resolution, marginal, partial, orth_pm, orth_mm;
  std::array<std::size_t, 6> type_counts{};
  for (std::size_t i = 0; i < o.samples; ++i) {
    const ComplexMatrix rho = sampler.density_matrix(i);
    const BlochMatrix bm = BlochMatrix::from_density(rho, o.tol);
    const FactorObservable c{random_observable(sampler, i, Stream::Axis),
                             random_observable(sampler, i, Stream::SecondAxis)};
    const QubitClass ca = sampler.qubit_class(i, Stream::Class);
    const QubitClass cb = sampler.qubit_class(i + kSecondDraw, Stream::Class);
    ++type_counts[static_cast<std::size_t>(two_qubit_type(ca, cb)) - 1];
    const BorelSet ea = borel_for(c.a, ca);
    const BorelSet eb = borel_for(c.b, cb);
    const double f = membership_two(c, ea, eb, bm, o.tol);
    diff.update(std::abs(f - oracle_membership_two(c, ea, eb, rho, o.tol)), i);
    range.update(std::max(-f, f - 1.0), i);

    const Vector3 a = c.a.axis();
    const Vector3 b = c.b.axis();
    std::array<double, 4> f4{};
    const auto fam = type4_family(a, b);
    for (std::size_t k = 0; k < 4; ++k) f4[k] = fam[k](bm);
    resolution.update(std::abs(f4[0] + f4[1] + f4[2] + f4[3] - 1.0), i);
    orth_pm.update(f4[0] + f4[1] - 1.0, i);
    orth_mm.update(f4[0] + f4[3] - 1.0, i);

    const double first = membership_two(a, b, bm, QubitClass::Plus, QubitClass::Both, o.tol);
    const double second = membership_two(a, b, bm, QubitClass::Both, QubitClass::Minus, o.tol);
    marginal.update(
        std::max(std::abs(first - membership_qubit(a, trace_out(bm, Subsystem::First), QubitClass::Plus, o.tol)),
                 std::abs(second - membership_qubit(b, trace_out(bm, Subsystem::Second), QubitClass::Minus, o.tol))),
        i);
    const QubitState m1 = QubitState::from_density(partial_trace(rho, Subsystem::First), o.tol);
    const QubitState m2 = QubitState::from_density(partial_trace(rho, Subsystem::Second), o.tol);
    partial.update(std::max((m1.bloch() - trace_out(bm, Subsystem::First).bloch()).cwiseAbs().maxCoeff(),
                            (m2.bloch() - trace_out(bm, Subsystem::Second).bloch()).cwiseAbs().maxCoeff()),
                   i);
  }
  Report r;
  r.add(bound("membership_vs_trace_oracle", diff, o.tol.oracle));
  const bool all_types = std::all_of(type_counts.begin(), type_counts.end(), [](auto n) { return n > 0; });
  r.add(make_check("all_six_types_sampled", all_types || o.samples < 64,
                   static_cast<double>(*std::min_element(type_counts.begin(), type_counts.end())),
                   fmt::format("counts={},{},{},{},{},{}", type_counts[0], type_counts[1],
                               type_counts[2], type_counts[3], type_counts[4], type_counts[5])));
  r.add(bound("membership_in_unit_interval", range, 0.0));
  r.add(bound("resolution_of_identity", resolution, o.tol.oracle));
  r.add(bound("marginal_consistency", marginal, o.tol.oracle));
  r.add(bound("trace_out_vs_partial_trace", partial, o.tol.oracle));
  r.add(bound("orthogonality_sum_pp_pm", orth_pm, o.tol.oracle));
  r.add(bound("orthogonality_sum_pp_mm", orth_mm, o.tol.oracle));

  Worst pure;
  for (std::size_t i = 0; i < o.samples; ++i) {
    auto g = sampler.engine(i, Stream::QubitState);
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::Matrix2cd lambda;
    for (int k = 0; k < 4; ++k) {
      const double re = n(g);
      lambda(k / 2, k % 2) = Complex{re, n(g)};
    }
    lambda /= lambda.norm();
    const PureTwoQubit psi = PureTwoQubit::from_amplitudes(lambda, o.tol);
    const Vector3 bhat = sampler.unit_vector(i, Stream::SecondAxis);
    const Projector p = factor_projector(Vector3::UnitZ(), bhat, QubitClass::Plus, QubitClass::Plus, o.tol);
    const ComplexVector v = psi.state_vector();
    const double expect = (v.adjoint() * p.matrix().entries() * v)(0, 0).real();
    pure.update(std::abs(membership_pure_two(psi, bhat, o.tol) - expect), i);
  }
  r.add(bound("pure_state_form", pure, o.tol.oracle));
  return r;
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{"oracle", "orthogonality", "pykacz", "laws", "lattice",
                                                   "positivity", "cartan", "qutrit", "gates", "all"};
  return names;
}

Report oracle_suite(const SuiteOptions& o) {
  return o.system == System::Qubit ? qubit_oracle(o) : two_qubit_oracle(o);
}

Report orthogonality_suite(const SuiteOptions& o) {
  const StateUniverse u = StateUniverse::sampled(o.system, o.samples, o.seed);
  const Sampler sampler(o.seed);
  const Vector3 a = sampler.unit_vector(0, Stream::Axis);
  Report r;
  if (o.system == System::Qubit) {
    const Functional zero = Functional::constant(0, System::Qubit);
    const Functional one = Functional::constant(1, System::Qubit);
    const Functional fa = Functional::qubit(a, QubitClass::Plus);
    const Functional fm = Functional::qubit(-a, QubitClass::Plus);
    r.append(orthogonality_postulate_check({zero, one}, u, o.tol), "seq1_0_1.");
    r.append(orthogonality_postulate_check({zero, fa}, u, o.tol), "seq2_0_fa.");
    r.append(orthogonality_postulate_check({fa, fm}, u, o.tol), "seq3_fa_fma.");
    r.append(orthogonality_postulate_check({zero, fa, fm}, u, o.tol), "seq4_0_fa_fma.");
    r.append(orthogonality_postulate_check({fa}, u, o.tol), "singleton.");

    // Sampled disjointness against the analytic criterion a = -b.
    std::size_t disagreements = 0, refuted = 0;
    const std::size_t pairs = 16;
    for (std::size_t i = 0; i < pairs; ++i) {
      const Vector3 x = sampler.unit_vector(i, Stream::Axis);
      const Vector3 y = i % 2 == 0 ? Vector3(-x) : sampler.unit_vector(i, Stream::SecondAxis);
      const Disjointness d = weakly_disjoint(Functional::qubit(x, QubitClass::Plus),
                                             Functional::qubit(y, QubitClass::Plus), u, o.tol);
      if (d.disjoint != orthogonal_pair(x, y, o.tol)) ++disagreements;
      if (!d.disjoint && d.witness) ++refuted;
    }
    r.add(make_check("sampled_matches_analytic", disagreements == 0, static_cast<double>(disagreements),
                     fmt::format("pairs={},refuted_with_witness={}", pairs, refuted)));
    const Disjointness same = weakly_disjoint(fa, fa, u, o.tol);
    r.add(make_check("same_axis_not_orthogonal", !same.disjoint, same.worst,
                     same.witness ? describe(*same.witness) : ""));
  } else {
    const Vector3 b = sampler.unit_vector(0, Stream::SecondAxis);
    const auto fam = type4_family(a, b);
    r.append(orthogonality_postulate_check({fam.begin(), fam.end()}, u, o.tol), "type4_family.");
    const Disjointness d = weakly_disjoint(fam[0], fam[3], u, o.tol);
    r.add(make_check("pp_mm_weakly_disjoint", d.disjoint, -d.worst));
    const Disjointness e = weakly_disjoint(fam[0], fam[1], u, o.tol);
    r.add(make_check("pp_pm_weakly_disjoint", e.disjoint, -e.worst));
  }
  return r;
}

Report pykacz_suite(const SuiteOptions& o) {
  const StateUniverse u = StateUniverse::sampled(o.system, o.samples, o.seed);
  const Sampler sampler(o.seed);
  const Vector3 a = sampler.unit_vector(0, Stream::Axis);
  Report r;
  if (o.system == System::Qubit) {
    const Functional zero = Functional::constant(0, System::Qubit);
    const Functional one = Functional::constant(1, System::Qubit);
    const Functional fa = Functional::qubit(a, QubitClass::Plus);
    const Functional fm = Functional::qubit(-a, QubitClass::Plus);
    r.append(pykacz_family_check({zero, one, fa, fm}, u, o.tol), "family.");
    const Report partial = pykacz_family_check({zero, one, fa}, u, o.tol);
    const Check* p2 = partial.find("property2_complement");
    r.add(make_check("missing_complement_detected", p2 && !p2->passed(), p2 ? p2->margin : 0.0,
                     p2 ? p2->witness : ""));
  } else {
    // The Boolean algebra generated by the four type-4 functionals.
    const auto atoms = type4_family(a, sampler.unit_vector(0, Stream::SecondAxis));
    std::vector<Functional> family;
    for (unsigned mask = 0; mask < 16; ++mask) {
      std::vector<Functional> parts;
      for (unsigned k = 0; k < 4; ++k) {
        if (mask & (1u << k)) parts.push_back(atoms[k]);
      }
      family.push_back(Functional::bold_union(std::move(parts), System::TwoQubit));
    }
    r.append(pykacz_family_check(family, u, o.tol), "boolean_algebra.");
  }
  return r;
}

Report laws_suite(const SuiteOptions& o) {
  return law_survey(StateUniverse::sampled(o.system, o.samples, o.seed), 8, o.tol);
}

Report lattice_suite(const SuiteOptions& o) {
  const Sampler sampler(o.seed);
  Report r;
  for (int dim : {2, 4}) {
    Worst orthomodular, order, complement;
    for (std::size_t i = 0; i < o.samples; ++i) {
      const Projector p = sampler.projector(i, dim);
      const Projector extra = sampler.projector(i + kSecondDraw, dim);
      const Projector q = subspace_join(p, extra, o.tol);
      orthomodular.update(orthomodular_residual(p, q, o.tol), i);
      const Projector meet = subspace_meet(p, extra, o.tol);
      const bool ordered = is_below(meet, p, o.tol.subspace) && is_below(p, q, o.tol.subspace) &&
                           is_below(extra, q, o.tol.subspace);
      order.update(ordered ? 0.0 : 1.0, i);
      const Projector pc = orthocomplement(p);
      complement.update(std::max(subspace_meet(p, pc, o.tol).matrix().max_abs(),
                                 max_abs_diff(subspace_join(p, pc, o.tol).matrix(),
                                              ComplexMatrix::identity(dim))),
                        i);
    }
    r.add(bound(fmt::format("orthomodular_dim{}", dim), orthomodular, o.tol.subspace));
    r.add(bound(fmt::format("meet_below_join_dim{}", dim), order, 0.0));
    r.add(bound(fmt::format("complementation_dim{}", dim), complement, o.tol.subspace));
    const DistributivityWitness w = distributivity_counterexample(dim, o.tol);
    r.add(make_check(fmt::format("distributivity_violated_dim{}", dim), w.gap >= 0.99, w.gap,
                     fmt::format("rank_lhs={},rank_rhs={}", w.lhs.rank(), w.rhs.rank())));
  }
  Worst exp_inverse;
  for (std::size_t i = 0; i < o.samples; ++i) {
    auto g = sampler.engine(i, Stream::Density);
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::MatrixXcd h(4, 4);
    for (int k = 0; k < 16; ++k) {
      const double re = n(g);
      h(k / 4, k % 4) = Complex{re, n(g)};
    }
    const ComplexMatrix x(Complex{0.0, 1.0} * (h + h.adjoint()).eval());
    exp_inverse.update(max_abs_diff(matrix_exp(x) * matrix_exp(-x), ComplexMatrix::identity(4)), i);
  }
  r.add(bound("exp_inverse", exp_inverse, o.tol.idempotent));
  return r;
}

Report positivity_suite(const SuiteOptions& o) {
  const Sampler sampler(o.seed);
  std::map<std::string, std::pair<double, std::size_t>> worst;  // min margin, violations
  std::vector<std::string> order;
  for (std::size_t i = 0; i < o.samples; ++i) {
    const Report rep = inequality_suite(sampler.two_qubit_state(i), o.tol);
    for (const auto& c : rep.checks()) {
      auto [it, fresh] = worst.try_emplace(c.name, c.margin, 0);
      if (fresh) order.push_back(c.name);
      it->second.first = std::min(it->second.first, c.margin);
      if (!c.passed()) ++it->second.second;
    }
  }
  Report r;
  for (const auto& name : order) {
    const auto& [margin, violations] = worst.at(name);
    r.add(make_check(name, violations == 0, margin,
                     fmt::format("violations={},samples={}", violations, o.samples)));
  }
  // The Bell state saturates tr(R^T R) + |s|^2 + |r|^2 <= 3.
  ComplexVector bell = ComplexVector::Zero(4);
  bell[0] = bell[3] = 0.70710678118654752440;
  const BlochMatrix bm = BlochMatrix::from_density(ComplexMatrix(bell * bell.adjoint()), o.tol);
  const double trr = bm.correlation().squaredNorm();
  r.add(make_check("bell_norm_sum_equality", std::abs(trr - 3.0) <= o.tol.oracle, std::abs(trr - 3.0),
                   fmt::format("trRtR={}", format_number(trr))));
  r.add(make_check("bell_locally_maximally_mixed", locally_maximally_mixed(bm, o.tol),
                   std::max(bm.s().norm(), bm.r().norm())));
  return r;
}

Report cartan_suite(const SuiteOptions& o) { return cartan_report(cartan_split(), o.tol); }

Report qutrit_suite(const SuiteOptions& o) {
  const Sampler sampler(o.seed);
  Worst oracle, preserved, diagonal, commute, printed;
  for (std::size_t i = 0; i < o.samples; ++i) {
    const QutritBloch q = sampler.qutrit_state(i);
    auto g = sampler.engine(i, Stream::Angle);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    const double t1 = angle(g), t2 = angle(g), alpha = angle(g);
    const QutritBloch closed = nonlocal_transform(q, t1, t2, o.tol);
    const BlochMatrix ref = nonlocal_oracle(q.underlying(), alpha, alpha + t1, alpha + t2, o.tol);
    oracle.update(max_diff(closed.underlying().array(), ref.array()), i);
    preserved.update(check_qutrit(ref, o.tol).bloch_residual, i);
    diagonal.update((ref.correlation().diagonal() - q.underlying().correlation().diagonal())
                        .cwiseAbs().maxCoeff(), i);
    const Eigen::Matrix4d both = closed.underlying().array();
    const Eigen::Matrix4d a = nonlocal_transform(nonlocal_transform(q, t1, 0.0, o.tol), 0.0, t2, o.tol)
                                  .underlying().array();
    const Eigen::Matrix4d b = nonlocal_transform(nonlocal_transform(q, 0.0, t2, o.tol), t1, 0.0, o.tol)
                                  .underlying().array();
    commute.update(std::max(max_diff(a, both), max_diff(b, both)), i);
    const TorusCoordinates ref_x = QutritBloch::from_bloch_matrix(ref, o.tol).torus_coordinates();
    printed.update((printed_nonlocal_transform(q.torus_coordinates(), t1, t2) - ref_x).cwiseAbs().maxCoeff(), i);
  }
  Report r;
  r.add(bound("torus_vs_conjugation_oracle", oracle, o.tol.torus_oracle));
  r.add(bound("qutrit_condition_preserved", preserved, o.tol.qutrit));
  r.add(bound("diagonal_invariant", diagonal, o.tol.torus_oracle));
  r.add(bound("flows_commute", commute, o.tol.torus_oracle));
  r.add(make_info("printed_closed_form_vs_oracle", printed.value, printed.where()));

  if (o.samples > 0) r.append(vector_field_check(sampler.qutrit_state(0), o.tol), "vector_field.");

  // The two readings of "no singlet" on general states and on qutrits.
  std::size_t disagreements = 0;
  for (std::size_t i = 0; i < o.samples; ++i) {
    for (const BlochMatrix& bm : {sampler.two_qubit_state(i), sampler.qutrit_state(i).underlying()}) {
      const QutritCheck c = check_qutrit(bm, o.tol);
      if (c.bloch_condition != c.singlet_coherence_free) ++disagreements;
    }
  }
  r.add(make_check("bloch_condition_is_swap_invariance", disagreements == 0,
                   static_cast<double>(disagreements), fmt::format("states={}", 2 * o.samples)));
  r.append(check_qutrit(BlochMatrix::maximally_mixed(), o.tol).report(), "maximally_mixed.");
  const ComplexVector qs = entangled_basis_matrix().entries().row(1).adjoint();
  r.append(check_qutrit(BlochMatrix::from_density(ComplexMatrix(qs * qs.adjoint()), o.tol), o.tol).report(),
           "triplet_qs.");
  return r;
}

Report gates_suite(const SuiteOptions& o) {
  const Sampler sampler(o.seed);
  Report r;
  for (GateName g : {GateName::Not, GateName::SqrtNot, GateName::Cnot}) {
    const ComplexMatrix& u = gate_spec(g).unitary;
    const double e = max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(u.dim()));
    r.add(make_check(fmt::format("{}_unitary", to_string(g)), e <= o.tol.unitary, e));
  }
  Worst not_oracle, sqrt_oracle, cnot_oracle, squared, table, rotation, lipschitz;
  for (std::size_t i = 0; i < o.samples; ++i) {
    const QubitState s = sampler.qubit_state(i);
    const auto bloch_of = [](const State& x) { return std::get<QubitState>(x).bloch(); };
    not_oracle.update((bloch_of(apply_gate(GateName::Not, s)) - bloch_of(apply_gate_oracle(GateName::Not, s)))
                          .cwiseAbs().maxCoeff(), i);
    sqrt_oracle.update((bloch_of(apply_gate(GateName::SqrtNot, s)) -
                        bloch_of(apply_gate_oracle(GateName::SqrtNot, s))).cwiseAbs().maxCoeff(), i);
    squared.update(apply_sqrt_not(apply_sqrt_not(s)).bloch() == apply_not(s).bloch() ? 0.0 : 1.0, i);

    const BlochMatrix bm = sampler.two_qubit_state(i);
    const BlochMatrix via_oracle = std::get<BlochMatrix>(apply_gate_oracle(GateName::Cnot, bm));
    cnot_oracle.update(max_diff(apply_cnot(bm).array(), via_oracle.array()), i);
    table.update(cnot_membership_table(bm).permutation_exact() ? 0.0 : 1.0, i);

    const double theta = sampler.uniform(i, Stream::Angle, 0.0, std::numbers::pi);
    const ComplexMatrix ru = x_rotation_unitary(theta);
    rotation.update((x_rotation(s, theta).bloch() -
                     QubitState::from_density(ru * s.density_matrix() * ru.adjoint()).bloch())
                        .cwiseAbs().maxCoeff(), i);
    const Vector3 a = sampler.unit_vector(i, Stream::Axis);
    const auto rows = continuity_table(a, s, 33);
    for (std::size_t k = 1; k < rows.size(); ++k) {
      const double step = rows[k].theta - rows[k - 1].theta;
      const double jump = std::abs(rows[k].membership - rows[k - 1].membership);
      lipschitz.update(jump - step * s.radius(), i);
    }
  }
  r.add(bound("not_vs_conjugation_oracle", not_oracle, o.tol.oracle));
  r.add(bound("sqrt_not_vs_conjugation_oracle", sqrt_oracle, o.tol.oracle));
  r.add(bound("cnot_vs_conjugation_oracle", cnot_oracle, o.tol.oracle));
  r.add(bound("sqrt_not_squared_is_not", squared, 0.0));
  r.add(bound("cnot_membership_permutation", table, 0.0));
  r.add(bound("x_rotation_vs_oracle", rotation, o.tol.oracle));
  r.add(bound("x_rotation_continuity", lipschitz, 1e-15));

  // Endpoints of the continuous family.
  Worst endpoints;
  for (std::size_t i = 0; i < o.samples; ++i) {
    const QubitState s = sampler.qubit_state(i);
    endpoints.update(std::max({(x_rotation(s, 0.0).bloch() - s.bloch()).cwiseAbs().maxCoeff(),
                               (x_rotation(s, std::numbers::pi / 2).bloch() - apply_sqrt_not(s).bloch())
                                   .cwiseAbs().maxCoeff(),
                               (x_rotation(s, std::numbers::pi).bloch() - apply_not(s).bloch())
                                   .cwiseAbs().maxCoeff()}),
                     i);
  }
  r.add(bound("x_rotation_endpoints", endpoints, 1e-15));

  // |+>|0> through CNOT is the Bell state with R = diag(1, -1, 1).
  Matrix3 product = Matrix3::Zero();
  product(0, 2) = 1.0;
  const BlochMatrix plus_zero = BlochMatrix::from_blocks(Vector3::UnitX(), Vector3::UnitZ(), product, o.tol);
  const BlochMatrix bell = apply_cnot(plus_zero);
  Matrix3 bell_r = Matrix3::Zero();
  bell_r.diagonal() << 1.0, -1.0, 1.0;
  const double bell_gap = std::max({(bell.correlation() - bell_r).cwiseAbs().maxCoeff(),
                                    bell.s().cwiseAbs().maxCoeff(), bell.r().cwiseAbs().maxCoeff()});
  r.add(make_check("cnot_builds_bell_state", bell_gap <= o.tol.oracle, bell_gap));

  const StateUniverse u = StateUniverse::sampled(System::Qubit, o.samples, o.seed);
  const NotComplementResult z = not_vs_complement(Vector3::UnitZ(), u, o.tol);
  r.add(make_check("not_equals_complement_z", z.equal && z.max_gap <= 1e-15, z.max_gap));
  const NotComplementResult x = not_vs_complement(Vector3::UnitX(), u, o.tol);
  r.add(make_check("not_differs_from_complement_x", !x.equal && x.witness.has_value(), x.max_gap,
                   x.witness ? describe(*x.witness) : ""));
  std::size_t disagreements = 0;
  for (std::size_t i = 0; i < 16; ++i) {
    Vector3 a = sampler.unit_vector(i, Stream::Axis);
    if (i % 2 == 0) {
      a[0] = 0.0;
      a.normalize();
    }
    const NotComplementResult res = not_vs_complement(a, u, o.tol);
    if (res.equal != res.analytic_equal) ++disagreements;
  }
  r.add(make_check("not_complement_iff_a1_zero", disagreements == 0, static_cast<double>(disagreements)));
  return r;
}

Report run_suite(std::string_view name, const SuiteOptions& o) {
  if (name == "oracle") return oracle_suite(o);
  if (name == "orthogonality") return orthogonality_suite(o);
  if (name == "pykacz") return pykacz_suite(o);
  if (name == "laws") return laws_suite(o);
  if (name == "lattice") return lattice_suite(o);
  if (name == "positivity") return positivity_suite(o);
  if (name == "cartan") return cartan_suite(o);
  if (name == "qutrit") return qutrit_suite(o);
  if (name == "gates") return gates_suite(o);
  if (name == "all") {
    Report r;
    for (std::string_view s : suite_names()) {
      if (s != "all") r.append(run_suite(s, o), fmt::format("{}/", s));
    }
    return r;
  }
  throw ParseError(fmt::format("unknown suite '{}'", name));
}

}  // namespace fuzzybit
