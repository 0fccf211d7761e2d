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

#include "commands.hpp"

#include <cmath>
#include <numbers>
#include <string_view>

#include <fmt/format.h>

#include "fuzzybit/borel.hpp"
#include "fuzzybit/error.hpp"
#include "fuzzybit/gates.hpp"
#include "fuzzybit/io.hpp"
#include "fuzzybit/oracle.hpp"
#include "fuzzybit/qubit.hpp"
#include "fuzzybit/qutrit.hpp"
#include "fuzzybit/report.hpp"
#include "fuzzybit/sampling.hpp"
#include "fuzzybit/suites.hpp"
#include "fuzzybit/twoqubit.hpp"

namespace fuzzybit::cli {
namespace {

int digits(bool full) { return full ? 17 : 15; }

QubitClass parse_factor_class(char c) {
  switch (c) {
    case '+': return QubitClass::Plus;
    case '-': return QubitClass::Minus;
    case '0': return QubitClass::None;
    case '*': return QubitClass::Both;
    default: throw ParseError(fmt::format("unknown factor class '{}' (use +, -, 0 or *)", c));
  }
}

std::pair<QubitClass, QubitClass> parse_pair_class(std::string_view text) {
  if (text.size() != 2) throw ParseError(fmt::format("two-qubit class '{}' must have two characters", text));
  return {parse_factor_class(text[0]), parse_factor_class(text[1])};
}

QubitState qubit_state_from(const MembershipArgs& args) {
  const int given = args.rho.has_value() + args.state.has_value() + args.alpha.has_value();
  if (given != 1) throw UsageError("give exactly one of --rho, --state or --alpha");
  if (args.alpha) return QubitState::from_angle(*args.alpha);
  if (args.state) return parse_qubit_state(read_text_file(*args.state));
  std::string_view text = *args.rho;
  if (text.starts_with("rho=")) text.remove_prefix(4);
  return QubitState::from_bloch(parse_vector3(text));
}

// Observable and Borel set for one factor: either an explicit observable
// with a Borel set, or a unit axis with a class.
struct Factor {
  Observable2 observable;
  BorelSet set;
};

Factor factor_from(const std::optional<std::string>& axis, const std::optional<std::string>& observable,
                   const std::optional<std::string>& borel, std::optional<QubitClass> cls,
                   std::string_view which) {
  if (axis.has_value() == observable.has_value()) {
    throw UsageError(fmt::format("give exactly one of --{0} or --observable{1}", which,
                                 which == "a" ? "" : "-b"));
  }
  if (observable) {
    if (!borel) throw UsageError("--observable needs a Borel set");
    return {parse_observable(*observable), BorelSet::parse(*borel)};
  }
  if (borel) throw UsageError("a Borel set goes with an observable, use --class with an axis");
  const Vector3 v = parse_vector3(*axis);
  const QubitClass c = cls ? *cls : QubitClass::Plus;
  if (c == QubitClass::Plus || c == QubitClass::Minus) require_unit(v);
  const double n = v.norm();
  return {Observable2{0.0, v}, representative_borel_set(-n, n, c)};
}

int print_membership(double value, double oracle, bool full, std::ostream& out) {
  const int d = digits(full);
  out << fmt::format("{} oracle={} diff={}\n", format_number(value, d), format_number(oracle, d),
                     format_number(std::abs(value - oracle), d));
  return kExitOk;
}

void emit(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
  if (path) {
    write_text_file(*path, text);
  } else {
    out << text;
  }
}

}  // namespace

int run_membership(const MembershipArgs& args, std::ostream& out) {
  const System system = parse_system(args.system);
  if (system == System::Qubit) {
    if (args.b || args.observable_b || args.borel_b) throw UsageError("qubit membership takes one axis");
    std::optional<QubitClass> cls;
    if (args.cls) cls = parse_qubit_class(*args.cls);
    if (cls && args.observable) throw UsageError("--class goes with --a; an observable uses --borel");
    const QubitState s = qubit_state_from(args);
    const Factor f = factor_from(args.a, args.observable, args.borel, cls, "a");
    return print_membership(membership_qubit(f.observable, f.set, s),
                            oracle_membership_qubit(f.observable, f.set, s.density_matrix()),
                            args.full_precision, out);
  }
  if (args.rho || args.alpha) throw UsageError("two-qubit states are read with --state");
  if (!args.state) throw UsageError("two-qubit membership needs --state FILE");
  std::optional<QubitClass> ca, cb;
  if (args.cls) {
    if (args.observable || args.observable_b) throw UsageError("--class goes with --a/--b");
    std::tie(ca, cb) = parse_pair_class(*args.cls);
  }
  const BlochMatrix bm = parse_bloch_matrix(read_text_file(*args.state));
  const Factor fa = factor_from(args.a, args.observable, args.borel, ca, "a");
  const Factor fb = factor_from(args.b, args.observable_b, args.borel_b, cb, "b");
  const FactorObservable c{fa.observable, fb.observable};
  return print_membership(membership_two(c, fa.set, fb.set, bm),
                          oracle_membership_two(c, fa.set, fb.set, bm.density_matrix()),
                          args.full_precision, out);
}

int run_curve(const CurveArgs& args, std::ostream& out) {
  if (!(args.rho_norm >= 0.0 && args.rho_norm <= 0.5)) {
    throw DomainError(fmt::format("--rho-norm {} is outside [0, 1/2]", args.rho_norm));
  }
  if (args.points < 2) throw DomainError("--points must be at least 2");
  const int d = digits(args.full_precision);
  out << "theta,f\n";
  for (int k = 0; k < args.points; ++k) {
    const double theta = std::numbers::pi * k / (args.points - 1);
    const double f = 0.5 + args.rho_norm * std::cos(theta);
    out << fmt::format("{},{}\n", format_number(theta, d), format_number(f, d));
  }
  return kExitOk;
}

std::uint64_t resolve_seed(const std::optional<std::string>& flag, const char* env_value) {
  const auto parse = [](const std::string& text, std::string_view source) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(text, &used, 0);
    } catch (const std::exception&) {
      used = 0;
    }
    if (text.empty() || used != text.size() || text.front() == '-') {
      throw ParseError(fmt::format("{} '{}' is not an unsigned 64-bit integer", source, text));
    }
    return v;
  };
  if (flag) return parse(*flag, "--seed");
  if (env_value != nullptr && *env_value != '\0') return parse(env_value, kSeedEnv);
  return kDefaultSeed;
}

int run_verify(const VerifyArgs& args, std::ostream& out) {
  SuiteOptions o;
  o.system = parse_system(args.system);
  o.samples = args.samples;
  o.seed = resolve_seed(args.seed, std::getenv(kSeedEnv));
  for (const auto& kv : args.tolerances) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ParseError(fmt::format("--tol expects name=value, got '{}'", kv));
    set_tolerance(o.tol, std::string_view(kv).substr(0, eq), parse_real(std::string_view(kv).substr(eq + 1)));
  }
  const Report report = run_suite(args.suite, o);
  out << fmt::format("# suite={} system={} samples={} seed={:#x}\n", args.suite, to_string(o.system),
                     o.samples, o.seed);
  out << report.to_text(digits(args.full_precision));
  return report.all_pass() ? kExitOk : kExitCheckFailed;
}

int run_gate_apply(const GateArgs& args, std::ostream& out) {
  const GateName g = parse_gate_name(args.gate);
  const std::string text = read_text_file(args.state);
  if (g == GateName::Cnot) {
    emit(args.out, format_bloch_matrix(apply_cnot(parse_bloch_matrix(text))), out);
  } else {
    const QubitState s = parse_qubit_state(text);
    emit(args.out, format_qubit_state(g == GateName::Not ? apply_not(s) : apply_sqrt_not(s)), out);
  }
  return kExitOk;
}

int run_qutrit_evolve(const EvolveArgs& args, std::ostream& out) {
  const QutritBloch q = QutritBloch::from_bloch_matrix(parse_bloch_matrix(read_text_file(args.state)));
  emit(args.out, format_bloch_matrix(nonlocal_transform(q, args.theta1, args.theta2).underlying()), out);
  return kExitOk;
}

int run_qutrit_check(const std::string& state, std::ostream& out) {
  const Report r = check_qutrit(parse_bloch_matrix(read_text_file(state))).report();
  out << r.to_text();
  return r.all_pass() ? kExitOk : kExitCheckFailed;
}

}  // namespace fuzzybit::cli
