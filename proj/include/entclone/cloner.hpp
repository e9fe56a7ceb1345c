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

#pragma once

#include <utility>
#include <vector>

#include "entclone/states.hpp"

namespace entclone {

/// Coefficients (A, B, C) of the SO(4)-invariant rank-4 tensor
/// s_ijkl = A d_il d_jk + B d_jl d_ik + C d_kl d_ij.
/// Valid cloners satisfy
/// 4(|A|^2+|B|^2+|C|^2) + 2 Re(AB* + AC* + BC*) = 1.
struct ClonerCoefficients {
  Complex a, b, c;

  /// Absolute deviation from the normalization condition.
  double normalization_residual() const;
};

/// The SO(4)-invariant tensor, s[((i*4+j)*4+k)*4+l].
struct ClonerTensor {
  std::array<Complex, 256> s;

  Complex& at(int i, int j, int k, int l) { return s[((i * 4 + j) * 4 + k) * 4 + l]; }
  const Complex& at(int i, int j, int k, int l) const {
    return s[((i * 4 + j) * 4 + k) * 4 + l];
  }
};

/// Reduced states of the two clones plus their overlaps with the input.
struct ClonePair {
  ComplexMatrix rho_a, rho_b;  // computational basis, dims {2,2}
  double f_a, f_b;
};

/// One branch of the Bell-measure-and-reprepare strategy: with the given
/// probability both clones are prepared in the listed magic basis state.
struct BellOutcome {
  double probability;
  int index;
  TwoQubitPure state;
};

/// Closed-form optimum of the symmetric cloner:
/// A = B = (1/3) sqrt(1/2 + 1/sqrt(13)), C = A (sqrt(13) - 3)/2.
ClonerCoefficients optimal_symmetric_coeffs();

ClonerTensor tensor_from_coeffs(const ClonerCoefficients& co);

/// Recover (A, B, C) from an invariant tensor's entries.
ClonerCoefficients coeffs_from_tensor(const ClonerTensor& t);

/// Output state over clones a, b and the ancilla (all magic-indexed,
/// factor order a, b, ancilla): amp(i,j,k) = sum_l s_ijkl n_l.
/// Unit norm for every unit input.
Eigen::VectorXcd apply_cloner(const MagicCoefficients& n, const ClonerCoefficients& co);

/// Reduced clone states and fidelities f_x = <Phi| rho_x |Phi>.
ClonePair clone_pair(const MagicCoefficients& n, const ClonerCoefficients& co);

/// Magic-basis reduced states of the two clones from a 64-dim output vector
/// (factor order a, b, ancilla).
std::pair<Eigen::Matrix4cd, Eigen::Matrix4cd> clone_marginals_magic(
    const Eigen::VectorXcd& psi);

/// F_a = 4|A|^2 + |B|^2 + |C|^2 + 2 Re(AB* + AC* + BC*), F_b with A and B
/// swapped. Exact for maximally entangled inputs.
std::pair<double, double> fidelities_closed_form(const ClonerCoefficients& co);

/// Fidelity of clone a as a function of the real coefficient B and the
/// partner fidelity F_b, with A and C eliminated through the normalization
/// condition. Throws std::domain_error outside the feasible region.
double tradeoff_fa(double b_coeff, double f_b);

/// Baseline: clone each qubit independently with the optimal universal
/// qubit cloner, i.e. apply the Bloch shrink 2/3 on both qubits. Both
/// clones get the same state; F = 7/12 on maximally entangled inputs.
ClonePair local_clone_pair(const MagicCoefficients& n);

/// Bell measurement of the input followed by repreparation of both clones
/// in the measured basis state. Probabilities |<e_i|Phi>|^2.
std::vector<BellOutcome> bell_measure_reprepare(const MagicCoefficients& n);

}  // namespace entclone
