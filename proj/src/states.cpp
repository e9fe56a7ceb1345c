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

#include "entclone/states.hpp"

#include <cmath>
#include <stdexcept>

namespace entclone {

namespace {

constexpr double kNormTol = 1e-8;
constexpr double kEigClamp = 1e-9;

const Complex kI{0.0, 1.0};

Eigen::Matrix4cd build_magic_matrix() {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix4cd m;
  m.col(0) << s, 0, 0, s;            // |Phi+>
  m.col(1) << kI * s, 0, 0, -kI * s; // i|Phi->
  m.col(2) << 0, kI * s, kI * s, 0;  // i|Psi+>
  m.col(3) << 0, s, -s, 0;           // |Psi->
  return m;
}

const Eigen::Matrix4cd& spinflip_yy() {
  static const Eigen::Matrix4cd yy = [] {
    Eigen::Matrix2cd sy;
    sy << 0, -kI, kI, 0;
    Eigen::Matrix4cd out;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d) out(2 * a + b, 2 * c + d) = sy(a, c) * sy(b, d);
    return out;
  }();
  return yy;
}

void check_unit(const Eigen::Vector4cd& v, const char* what) {
  if (std::abs(v.norm() - 1.0) > kNormTol) {
    throw std::invalid_argument(std::string(what) + " must be normalized");
  }
}

// lambda_i of sqrt(sqrt(rho) rho_c sqrt(rho)) in decreasing order, where
// rho_c is the conjugate of rho in the basis rho is expressed in.
Eigen::Vector4d spinflip_lambdas(const Eigen::Matrix4cd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(rho);
  Eigen::Vector4d vals = eig.eigenvalues().cwiseMax(0.0);
  Eigen::Matrix4cd root =
      eig.eigenvectors() * vals.cwiseSqrt().asDiagonal() * eig.eigenvectors().adjoint();
  Eigen::Matrix4cd x = root * rho.conjugate() * root;
  x = 0.5 * (x + x.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig2(x);
  Eigen::Vector4d mu = eig2.eigenvalues().cwiseMax(0.0);
  return mu.cwiseSqrt().reverse();
}

double lambda_gap(const Eigen::Vector4d& lam) {
  Eigen::Vector4d l = lam;
  for (int i = 0; i < 4; ++i) {
    if (l[i] < 0.0 && l[i] >= -kEigClamp) l[i] = 0.0;
  }
  return l[0] - l[1] - l[2] - l[3];
}

void check_density_matrix(const ComplexMatrix& rho) {
  if (rho.size() != 4) throw std::invalid_argument("expected a 4x4 density matrix");
  if (hermiticity_gap(rho.data) > 1e-9 || std::abs(rho.data.trace().real() - 1.0) > 1e-9 ||
      std::abs(rho.data.trace().imag()) > 1e-9 || !is_psd(rho, 1e-9)) {
    throw std::invalid_argument("input is not a density matrix");
  }
}

}  // namespace

const Eigen::Matrix4cd& magic_matrix() {
  static const Eigen::Matrix4cd m = build_magic_matrix();
  return m;
}

std::array<TwoQubitPure, 4> magic_basis() {
  const Eigen::Matrix4cd& m = magic_matrix();
  std::array<TwoQubitPure, 4> out;
  for (int i = 0; i < 4; ++i) out[i].amps = m.col(i);
  return out;
}

MagicCoefficients to_magic(const TwoQubitPure& s) {
  check_unit(s.amps, "state");
  return {magic_matrix().adjoint() * s.amps};
}

TwoQubitPure from_magic(const MagicCoefficients& n) {
  check_unit(n.n, "magic coefficients");
  return {magic_matrix() * n.n};
}

double concurrence_pure(const MagicCoefficients& n) {
  check_unit(n.n, "magic coefficients");
  Complex sum = 0.0;
  for (int i = 0; i < 4; ++i) sum += n.n[i] * n.n[i];
  return std::abs(sum);
}

double concurrence_unclamped_magic(const Eigen::Matrix4cd& rho_magic) {
  return lambda_gap(spinflip_lambdas(rho_magic));
}

double concurrence_magic(const Eigen::Matrix4cd& rho_magic) {
  return std::max(0.0, concurrence_unclamped_magic(rho_magic));
}

double concurrence_mixed(const ComplexMatrix& rho) {
  check_density_matrix(rho);
  const Eigen::Matrix4cd& m = magic_matrix();
  Eigen::Matrix4cd rho_magic = m.adjoint() * rho.data * m;
  return concurrence_magic(rho_magic);
}

double concurrence_mixed_spinflip(const ComplexMatrix& rho) {
  check_density_matrix(rho);
  const Eigen::Matrix4cd& yy = spinflip_yy();
  Eigen::Matrix4cd r = rho.data;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(r);
  Eigen::Vector4d vals = eig.eigenvalues().cwiseMax(0.0);
  Eigen::Matrix4cd root =
      eig.eigenvectors() * vals.cwiseSqrt().asDiagonal() * eig.eigenvectors().adjoint();
  Eigen::Matrix4cd flipped = yy * r.conjugate() * yy;
  Eigen::Matrix4cd x = root * flipped * root;
  x = 0.5 * (x + x.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig2(x);
  Eigen::Vector4d lam = eig2.eigenvalues().cwiseMax(0.0).cwiseSqrt().reverse();
  return std::max(0.0, lambda_gap(lam));
}

double binary_entropy(double x) {
  if (x < 0.0 || x > 1.0) throw std::domain_error("binary_entropy: x outside [0,1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double eof_from_concurrence(double c) {
  if (c < -1e-9 || c > 1.0 + 1e-9) {
    throw std::domain_error("eof_from_concurrence: c outside [0,1]");
  }
  c = std::clamp(c, 0.0, 1.0);
  return binary_entropy(0.5 + 0.5 * std::sqrt(1.0 - c * c));
}

ComplexMatrix werner_state(double f, int i) {
  if (f < 0.0 || f > 1.0) throw std::domain_error("werner_state: f outside [0,1]");
  if (i < 0 || i > 3) throw std::out_of_range("werner_state: basis index");
  const Eigen::Matrix4cd& m = magic_matrix();
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (int j = 0; j < 4; ++j) {
    const double w = (j == i) ? f : (1.0 - f) / 3.0;
    rho += w * m.col(j) * m.col(j).adjoint();
  }
  return {rho, {2, 2}};
}

MagicCoefficients random_me_state(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Vector4d v;
  do {
    for (int i = 0; i < 4; ++i) v[i] = gauss(rng);
  } while (v.norm() < 1e-6);
  v.normalize();
  MagicCoefficients out;
  out.n = v.cast<Complex>();
  return out;
}

TwoQubitPure random_product_state(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto qubit = [&] {
    Eigen::Vector2cd q;
    do {
      q << Complex(gauss(rng), gauss(rng)), Complex(gauss(rng), gauss(rng));
    } while (q.norm() < 1e-6);
    q.normalize();
    return q;
  };
  Eigen::Vector2cd q1 = qubit(), q2 = qubit();
  TwoQubitPure out;
  out.amps << q1[0] * q2[0], q1[0] * q2[1], q1[1] * q2[0], q1[1] * q2[1];
  return out;
}

TwoQubitPure random_pure_state(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Vector4cd v;
  do {
    for (int i = 0; i < 4; ++i) v[i] = Complex(gauss(rng), gauss(rng));
  } while (v.norm() < 1e-6);
  v.normalize();
  return {v};
}

}  // namespace entclone
