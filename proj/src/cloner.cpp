// Copyright 2026 The entclone Authors
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

#include "entclone/cloner.hpp"

#include <cmath>
#include <stdexcept>

namespace entclone {

namespace {

constexpr double kCoeffTol = 1e-8;

void check_coeffs(const ClonerCoefficients& co) {
  if (co.normalization_residual() > kCoeffTol) {
    throw std::invalid_argument("cloner coefficients are not normalized");
  }
}

void check_input(const MagicCoefficients& n) {
  if (std::abs(n.n.norm() - 1.0) > kCoeffTol) {
    throw std::invalid_argument("input state is not normalized");
  }
}

ComplexMatrix magic_to_computational(const Eigen::Matrix4cd& rho_magic) {
  const Eigen::Matrix4cd& m = magic_matrix();
  return {m * rho_magic * m.adjoint(), {2, 2}};
}

// Bloch-vector shrink by eta on the given qubit of a 2-qubit state.
Eigen::Matrix4cd depolarize_qubit(const Eigen::Matrix4cd& rho, int qubit, double eta) {
  ComplexMatrix full{rho, {2, 2}};
  ComplexMatrix marg = partial_trace(full, {qubit == 0 ? 1 : 0});
  Eigen::Matrix4cd mixed;
  if (qubit == 0) {
    ComplexMatrix id2{Eigen::Matrix2cd::Identity() * 0.5, {2}};
    mixed = kron(id2, marg).data;
  } else {
    ComplexMatrix id2{Eigen::Matrix2cd::Identity() * 0.5, {2}};
    mixed = kron(marg, id2).data;
  }
  return eta * rho + (1.0 - eta) * mixed;
}

}  // namespace

double ClonerCoefficients::normalization_residual() const {
  const double quad = 4.0 * (std::norm(a) + std::norm(b) + std::norm(c)) +
                      2.0 * (a * std::conj(b) + a * std::conj(c) + b * std::conj(c)).real();
  return std::abs(quad - 1.0);
}

ClonerCoefficients optimal_symmetric_coeffs() {
  const double root13 = std::sqrt(13.0);
  const double a = std::sqrt(0.5 + 1.0 / root13) / 3.0;
  const double c = a * (root13 - 3.0) / 2.0;
  return {a, a, c};
}

ClonerTensor tensor_from_coeffs(const ClonerCoefficients& co) {
  ClonerTensor t;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          Complex v = 0.0;
          if (i == l && j == k) v += co.a;
          if (j == l && i == k) v += co.b;
          if (k == l && i == j) v += co.c;
          t.at(i, j, k, l) = v;
        }
  return t;
}

ClonerCoefficients coeffs_from_tensor(const ClonerTensor& t) {
  // s_0110 = A, s_1010 = B, s_0011 = C for distinct index pairs.
  return {t.at(0, 1, 1, 0), t.at(1, 0, 1, 0), t.at(0, 0, 1, 1)};
}

Eigen::VectorXcd apply_cloner(const MagicCoefficients& n, const ClonerCoefficients& co) {
  check_coeffs(co);
  check_input(n);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(64);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        Complex amp = 0.0;
        if (j == k) amp += co.a * n.n[i];
        if (i == k) amp += co.b * n.n[j];
        if (i == j) amp += co.c * n.n[k];
        psi[(i * 4 + j) * 4 + k] = amp;
      }
  if (std::abs(psi.norm() - 1.0) > 1e-9) {
    throw std::runtime_error("cloner output is not normalized");
  }
  return psi;
}

std::pair<Eigen::Matrix4cd, Eigen::Matrix4cd> clone_marginals_magic(
    const Eigen::VectorXcd& psi) {
  if (psi.size() != 64) throw std::invalid_argument("expected a 64-dim output vector");
  Eigen::Matrix4cd rho_a = Eigen::Matrix4cd::Zero();
  Eigen::Matrix4cd rho_b = Eigen::Matrix4cd::Zero();
  auto at = [&psi](int i, int j, int k) { return psi[(i * 4 + j) * 4 + k]; };
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      Complex acc_a = 0.0, acc_b = 0.0;
      for (int u = 0; u < 4; ++u) {
        for (int k = 0; k < 4; ++k) {
          acc_a += at(x, u, k) * std::conj(at(y, u, k));
          acc_b += at(u, x, k) * std::conj(at(u, y, k));
        }
      }
      rho_a(x, y) = acc_a;
      rho_b(x, y) = acc_b;
    }
  }
  return {rho_a, rho_b};
}

ClonePair clone_pair(const MagicCoefficients& n, const ClonerCoefficients& co) {
  Eigen::VectorXcd psi = apply_cloner(n, co);
  auto [rho_a, rho_b] = clone_marginals_magic(psi);
  ClonePair out;
  out.f_a = (n.n.adjoint() * rho_a * n.n)(0).real();
  out.f_b = (n.n.adjoint() * rho_b * n.n)(0).real();
  out.rho_a = magic_to_computational(rho_a);
  out.rho_b = magic_to_computational(rho_b);
  return out;
}

std::pair<double, double> fidelities_closed_form(const ClonerCoefficients& co) {
  const double cross =
      2.0 * (co.a * std::conj(co.b) + co.a * std::conj(co.c) + co.b * std::conj(co.c)).real();
  const double fa = 4.0 * std::norm(co.a) + std::norm(co.b) + std::norm(co.c) + cross;
  const double fb = 4.0 * std::norm(co.b) + std::norm(co.a) + std::norm(co.c) + cross;
  return {fa, fb};
}

double tradeoff_fa(double b_coeff, double f_b) {
  if (f_b < 0.25 - 1e-12 || f_b > 1.0 + 1e-12) {
    throw std::domain_error("tradeoff_fa: F_b outside [1/4, 1]");
  }
  const double r1 = -3.0 * b_coeff * b_coeff + f_b;
  if (r1 < 0.0) throw std::domain_error("tradeoff_fa: infeasible B for this F_b");
  const double root1 = std::sqrt(r1);
  const double r2 =
      18.0 * b_coeff * b_coeff + 18.0 * b_coeff * root1 - 15.0 * f_b + 6.0;
  if (r2 < 0.0) throw std::domain_error("tradeoff_fa: infeasible B for this F_b");
  return -3.0 * b_coeff * b_coeff + 0.5 * (f_b + 1.0) +
         0.5 * (root1 - b_coeff) * std::sqrt(r2);
}

ClonePair local_clone_pair(const MagicCoefficients& n) {
  check_input(n);
  const Eigen::Vector4cd amps = from_magic(n).amps;
  Eigen::Matrix4cd rho = amps * amps.adjoint();
  rho = depolarize_qubit(rho, 0, 2.0 / 3.0);
  rho = depolarize_qubit(rho, 1, 2.0 / 3.0);
  const Eigen::Matrix4cd& m = magic_matrix();
  Eigen::Matrix4cd rho_magic = m.adjoint() * rho * m;
  ClonePair out;
  out.f_a = out.f_b = (n.n.adjoint() * rho_magic * n.n)(0).real();
  out.rho_a = ComplexMatrix{rho, {2, 2}};
  out.rho_b = out.rho_a;
  return out;
}

std::vector<BellOutcome> bell_measure_reprepare(const MagicCoefficients& n) {
  check_input(n);
  std::array<TwoQubitPure, 4> basis = magic_basis();
  std::vector<BellOutcome> out;
  for (int i = 0; i < 4; ++i) {
    out.push_back({std::norm(n.n[i]), i, basis[i]});
  }
  return out;
}

}  // namespace entclone
