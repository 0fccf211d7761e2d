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

#include "fuzzybit/qutrit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "fuzzybit/error.hpp"

namespace fuzzybit {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr std::array<const char*, 6> kCoordinateNames{"r1", "r2", "r3", "R12", "R13", "R23"};

TorusCoordinates coordinates_of(const BlochMatrix& bm) {
  const Matrix3& R = bm.correlation();
  TorusCoordinates x;
  x << bm.r()[0], bm.r()[1], bm.r()[2], R(0, 1), R(0, 2), R(1, 2);
  return x;
}

// A field linear in the coordinates, as the matrix M with field(x) = M x.
template <typename Field>
Eigen::Matrix<double, 6, 6> field_matrix(Field field) {
  Eigen::Matrix<double, 6, 6> m;
  for (int j = 0; j < 6; ++j) m.col(j) = field(TorusCoordinates::Unit(j));
  return m;
}

std::string term_mismatches(const Eigen::Matrix<double, 6, 6>& printed,
                            const Eigen::Matrix<double, 6, 6>& derived) {
  std::string out;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      if (printed(i, j) == derived(i, j)) continue;
      if (!out.empty()) out += ';';
      out += fmt::format("d/d{}:{}:printed={:+g},derived={:+g}", kCoordinateNames[i],
                         kCoordinateNames[j], printed(i, j), derived(i, j));
    }
  }
  return out.empty() ? "none" : out;
}

Eigen::VectorXd realify(const ComplexMatrix& m) {
  Eigen::VectorXd v(2 * m.dim() * m.dim());
  int k = 0;
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      v[k++] = m(i, j).real();
      v[k++] = m(i, j).imag();
    }
  }
  return v;
}

Eigen::MatrixXd realify(const std::vector<ComplexMatrix>& basis) {
  Eigen::MatrixXd m(32, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = realify(basis[k]);
  return m;
}

double closure_residual(const std::vector<ComplexMatrix>& left,
                        const std::vector<ComplexMatrix>& right,
                        const std::vector<ComplexMatrix>& target) {
  double worst = 0.0;
  for (const auto& x : left) {
    for (const auto& y : right) worst = std::max(worst, span_residual(commutator(x, y), target));
  }
  return worst;
}

}  // namespace

const ComplexMatrix& entangled_basis_matrix() {
  static const ComplexMatrix a{{1.0, 0.0, 0.0, 0.0},
                               {0.0, kInvSqrt2, kInvSqrt2, 0.0},
                               {0.0, 0.0, 0.0, 1.0},
                               {0.0, kInvSqrt2, -kInvSqrt2, 0.0}};
  return a;
}

ComplexMatrix entangled_basis_change(const ComplexMatrix& rho_std) {
  if (rho_std.dim() != 4) throw DimensionError("entangled basis change needs a 4x4 matrix");
  const ComplexMatrix& a = entangled_basis_matrix();
  return a * rho_std * a.adjoint();
}

Report QutritCheck::report() const {
  Report r;
  r.add(make_check("bloch_condition", bloch_condition, bloch_residual));
  r.add(make_check("singlet_coherence", singlet_coherence_free, coherence_residual));
  r.add(make_check("conditions_agree", bloch_condition == singlet_coherence_free,
                   std::abs(bloch_residual - coherence_residual)));
  r.add(make_info("singlet_population", singlet_weight,
                  fmt::format("alpha={}", format_number(singlet_weight))));
  return r;
}

QutritCheck check_qutrit(const BlochMatrix& bm, const Tolerances& tol) {
  QutritCheck c;
  const Matrix3& R = bm.correlation();
  c.bloch_residual = std::max((bm.r() - bm.s()).cwiseAbs().maxCoeff(),
                              (R - R.transpose()).cwiseAbs().maxCoeff());
  const ComplexMatrix ntgl = entangled_basis_change(bm.density_matrix());
  for (int k = 0; k < 3; ++k) {
    c.coherence_residual = std::max({c.coherence_residual, std::abs(ntgl(3, k)), std::abs(ntgl(k, 3))});
  }
  c.singlet_weight = ntgl(3, 3).real();
  c.bloch_condition = c.bloch_residual <= tol.qutrit;
  c.singlet_coherence_free = c.coherence_residual <= tol.qutrit;
  c.singlet_free = c.singlet_coherence_free && std::abs(c.singlet_weight) <= tol.qutrit;
  return c;
}

bool is_qutrit(const BlochMatrix& bm, const Tolerances& tol) {
  return check_qutrit(bm, tol).bloch_condition;
}

QutritBloch QutritBloch::from_bloch_matrix(const BlochMatrix& bm, const Tolerances& tol) {
  const QutritCheck c = check_qutrit(bm, tol);
  if (!c.bloch_condition) {
    throw DomainError(fmt::format("not a qutrit state: Bloch residual {}", c.bloch_residual));
  }
  return QutritBloch(bm);
}

TorusCoordinates QutritBloch::torus_coordinates() const { return coordinates_of(bm_); }

QutritBloch nonlocal_transform(const QutritBloch& q, double theta1, double theta2,
                               const Tolerances& tol) {
  const TorusCoordinates x = q.torus_coordinates();
  const double c1 = std::cos(theta1), s1 = std::sin(theta1);
  const double c2 = std::cos(theta2), s2 = std::sin(theta2);
  const double c12 = std::cos(theta1 - theta2), s12 = std::sin(theta1 - theta2);
  const Vector3 r(x[0] * c12 - x[5] * s12, x[1] * c2 - x[4] * s2, x[2] * c1 + x[3] * s1);
  const double R12 = x[3] * c1 - x[2] * s1;
  const double R13 = x[4] * c2 + x[1] * s2;
  const double R23 = x[5] * c12 + x[0] * s12;
  const Matrix3& R = q.underlying().correlation();
  Matrix3 Rp;
  Rp << R(0, 0), R12, R13,
        R12, R(1, 1), R23,
        R13, R23, R(2, 2);
  return QutritBloch::from_bloch_matrix(BlochMatrix::from_blocks(r, r, Rp, tol), tol);
}

TorusCoordinates printed_nonlocal_transform(const TorusCoordinates& x, double theta1,
                                            double theta2) {
  const double c1 = std::cos(theta1), s1 = std::sin(theta1);
  const double c2 = std::cos(theta2), s2 = std::sin(theta2);
  const double c12 = std::cos(theta1 - theta2), s12 = std::sin(theta1 - theta2);
  TorusCoordinates y;
  y << x[0] * c12 + x[5] * s12,
       x[1] * c1 - x[4] * s2,
       x[2] * c1 + x[3] * s1,
       x[3] * c1 + x[2] * s1,
       x[4] * c2 + x[1] * s2,
       x[5] * c12 - x[0] * s12;
  return y;
}

ComplexMatrix nonlocal_unitary(double alpha, double beta, double gamma) {
  const ComplexMatrix h = Complex{alpha} * pauli_product(1, 1) + Complex{beta} * pauli_product(2, 2) +
                          Complex{gamma} * pauli_product(3, 3);
  return matrix_exp(Complex{0.0, 0.5} * h);
}

BlochMatrix nonlocal_oracle(const BlochMatrix& bm, double alpha, double beta, double gamma,
                            const Tolerances& tol) {
  const ComplexMatrix u = nonlocal_unitary(alpha, beta, gamma);
  return BlochMatrix::from_density(u * bm.density_matrix() * u.adjoint(), tol);
}

TorusCoordinates theta1_field(const TorusCoordinates& x) {
  TorusCoordinates v;
  v << -x[5], 0.0, x[3], -x[2], 0.0, x[0];
  return v;
}

TorusCoordinates theta2_field(const TorusCoordinates& x) {
  TorusCoordinates v;
  v << x[5], -x[4], 0.0, 0.0, x[1], -x[0];
  return v;
}

TorusCoordinates printed_theta1_field(const TorusCoordinates& x) {
  TorusCoordinates v;
  v << x[5], 0.0, x[3], x[2], 0.0, -x[0];
  return v;
}

TorusCoordinates printed_theta2_field(const TorusCoordinates& x) {
  TorusCoordinates v;
  v << -x[5], -x[4], 0.0, 0.0, x[1], x[0];
  return v;
}

Report vector_field_check(const QutritBloch& q, const Tolerances& tol) {
  const double h = tol.fd_step;
  const auto at = [&](double t1, double t2) {
    return nonlocal_transform(q, t1, t2, tol).torus_coordinates();
  };
  const TorusCoordinates fd1 = (at(h, 0.0) - at(-h, 0.0)) / (2.0 * h);
  const TorusCoordinates fd2 = (at(0.0, h) - at(0.0, -h)) / (2.0 * h);
  const TorusCoordinates x = q.torus_coordinates();

  Report report;
  const double e1 = (fd1 - theta1_field(x)).cwiseAbs().maxCoeff();
  const double e2 = (fd2 - theta2_field(x)).cwiseAbs().maxCoeff();
  report.add(make_check("theta1_field", e1 <= tol.fd_match, e1));
  report.add(make_check("theta2_field", e2 <= tol.fd_match, e2));

  const auto m1 = field_matrix(theta1_field);
  const auto m2 = field_matrix(theta2_field);
  const double bracket = (m1 * m2 - m2 * m1).cwiseAbs().maxCoeff();
  report.add(make_check("fields_commute", bracket <= tol.torus_oracle, bracket));

  report.add(make_info("printed_theta1_field", (fd1 - printed_theta1_field(x)).cwiseAbs().maxCoeff(),
                       term_mismatches(field_matrix(printed_theta1_field), m1)));
  report.add(make_info("printed_theta2_field", (fd2 - printed_theta2_field(x)).cwiseAbs().maxCoeff(),
                       term_mismatches(field_matrix(printed_theta2_field), m2)));
  return report;
}

const ComplexMatrix& bell_change_matrix() {
  static const ComplexMatrix b = Complex{kInvSqrt2} * ComplexMatrix{{1.0, 0.0, 0.0, 1.0},
                                                                    {0.0, kI, kI, 0.0},
                                                                    {0.0, 1.0, -1.0, 0.0},
                                                                    {kI, 0.0, 0.0, -kI}};
  return b;
}

ComplexMatrix tau(int mu, int nu) {
  if (mu == 0 && nu == 0) throw DomainError("tau_00 is not in su(4)");
  const ComplexMatrix& b = bell_change_matrix();
  return b * (Complex{0.0, 0.5} * pauli_product(mu, nu)) * b.adjoint();
}

CartanSplit cartan_split() {
  CartanSplit split;
  for (int i = 1; i <= 3; ++i) split.u_basis.push_back(tau(0, i));
  for (int i = 1; i <= 3; ++i) split.u_basis.push_back(tau(i, 0));
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) split.p_basis.push_back(tau(i, j));
  }
  for (int i = 1; i <= 3; ++i) split.a_basis.push_back(tau(i, i));
  return split;
}

int real_span_dimension(const std::vector<ComplexMatrix>& basis) {
  if (basis.empty()) return 0;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(realify(basis));
  qr.setThreshold(1e-10);
  return static_cast<int>(qr.rank());
}

double span_residual(const ComplexMatrix& x, const std::vector<ComplexMatrix>& basis) {
  const Eigen::VectorXd v = realify(x);
  if (basis.empty()) return v.cwiseAbs().maxCoeff();
  const Eigen::MatrixXd m = realify(basis);
  const Eigen::VectorXd coeffs = m.colPivHouseholderQr().solve(v);
  return (v - m * coeffs).cwiseAbs().maxCoeff();
}

Report cartan_report(const CartanSplit& split, const Tolerances& tol) {
  Report report;
  const ComplexMatrix& b = bell_change_matrix();
  const double unitarity = max_abs_diff(b * b.adjoint(), ComplexMatrix::identity(4));
  report.add(make_check("bell_change_unitary", unitarity <= tol.unitary, unitarity));

  const auto dim_check = [&](const char* name, int got, int want) {
    report.add(make_check(name, got == want, got, fmt::format("expected={}", want)));
  };
  dim_check("dim_u", real_span_dimension(split.u_basis), 6);
  dim_check("dim_p", real_span_dimension(split.p_basis), 9);
  dim_check("dim_a", real_span_dimension(split.a_basis), 3);
  std::vector<ComplexMatrix> both = split.u_basis;
  both.insert(both.end(), split.p_basis.begin(), split.p_basis.end());
  dim_check("u_cap_p_zero", real_span_dimension(both), 15);

  // The classification is exact: every entry of the Bell-basis generators is
  // a signed 0 or 1/2 times a power of i, so the residuals are compared with 0.
  double u_res = 0.0;
  for (const auto& x : split.u_basis) {
    u_res = std::max({u_res, x.entries().imag().cwiseAbs().maxCoeff(),
                      max_abs_diff(x, -x.transpose())});
  }
  report.add(make_check("u_real_antisymmetric", u_res == 0.0, u_res));
  double p_res = 0.0;
  for (const auto& x : split.p_basis) {
    p_res = std::max({p_res, x.entries().real().cwiseAbs().maxCoeff(),
                      max_abs_diff(x, x.transpose())});
  }
  report.add(make_check("p_imaginary_symmetric", p_res == 0.0, p_res));
  double a_res = 0.0;
  for (const auto& x : split.a_basis) {
    Eigen::MatrixXcd off = x.entries();
    off.diagonal().setZero();
    a_res = std::max({a_res, off.cwiseAbs().maxCoeff(), span_residual(x, split.p_basis)});
  }
  report.add(make_check("a_diagonal_in_p", a_res == 0.0, a_res));

  const double uu = closure_residual(split.u_basis, split.u_basis, split.u_basis);
  const double up = closure_residual(split.u_basis, split.p_basis, split.p_basis);
  const double pp = closure_residual(split.p_basis, split.p_basis, split.u_basis);
  report.add(make_check("bracket_uu_in_u", uu <= tol.cartan_closure, uu));
  report.add(make_check("bracket_up_in_p", up <= tol.cartan_closure, up));
  report.add(make_check("bracket_pp_in_u", pp <= tol.cartan_closure, pp));

  double abelian = 0.0;
  for (const auto& x : split.a_basis) {
    for (const auto& y : split.a_basis) abelian = std::max(abelian, commutator(x, y).max_abs());
  }
  report.add(make_check("a_abelian", abelian <= tol.abelian, abelian));
  return report;
}

}  // namespace fuzzybit
