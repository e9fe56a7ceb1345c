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

#include <array>
#include <random>

#include "entclone/qmat.hpp"

namespace entclone {

/// 2-qubit pure state, amplitudes in computational order (00, 01, 10, 11).
struct TwoQubitPure {
  Eigen::Vector4cd amps;
};

/// Amplitudes of a 2-qubit pure state in the magic basis e_0..e_3.
struct MagicCoefficients {
  Eigen::Vector4cd n;
};

/// The magic basis: e0 = |Phi+>, e1 = i|Phi->, e2 = i|Psi+>, e3 = |Psi->.
/// Every real unit combination of these is maximally entangled.
std::array<TwoQubitPure, 4> magic_basis();

/// Unitary whose columns are the magic basis vectors (computational rows).
const Eigen::Matrix4cd& magic_matrix();

MagicCoefficients to_magic(const TwoQubitPure& s);
TwoQubitPure from_magic(const MagicCoefficients& n);

/// Pure-state concurrence |sum_i n_i^2| of a normalized magic-basis vector.
double concurrence_pure(const MagicCoefficients& n);

/// Signed spectral gap lambda1 - lambda2 - lambda3 - lambda4 of
/// sqrt(sqrt(rho) conj(rho) sqrt(rho)), with rho given in the magic basis
/// (conjugation is basis-dependent). Concurrence is the clamp at zero.
double concurrence_unclamped_magic(const Eigen::Matrix4cd& rho_magic);

/// Mixed-state concurrence of a rho given in the magic basis.
double concurrence_magic(const Eigen::Matrix4cd& rho_magic);

/// Mixed-state concurrence of a 4x4 density matrix in the computational
/// basis, evaluated through the magic-basis conjugation.
double concurrence_mixed(const ComplexMatrix& rho);

/// Same quantity through the computational-basis spin flip
/// (sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y). Kept as an
/// independent route; the two must agree.
double concurrence_mixed_spinflip(const ComplexMatrix& rho);

/// Binary entropy -x log2 x - (1-x) log2(1-x), zero at the endpoints.
double binary_entropy(double x);

/// Entanglement of formation from concurrence:
/// E(c) = H(1/2 + 1/2 sqrt(1 - c^2)).
double eof_from_concurrence(double c);

/// F |e_i><e_i| + (1-F)/3 sum_{j != i} |e_j><e_j| in the computational
/// basis, dims {2,2}.
ComplexMatrix werner_state(double f, int i);

/// Uniformly random maximally entangled state: real Gaussian 4-vector in the
/// magic basis, normalized.
MagicCoefficients random_me_state(std::mt19937_64& rng);

/// Haar-random product state |q1> x |q2>.
TwoQubitPure random_product_state(std::mt19937_64& rng);

/// Haar-random 2-qubit pure state.
TwoQubitPure random_pure_state(std::mt19937_64& rng);

}  // namespace entclone
