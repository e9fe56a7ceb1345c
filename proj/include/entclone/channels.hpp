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

#include <random>
#include <string>
#include <vector>

#include "entclone/cloner.hpp"

namespace entclone {

enum class ChoiBasis { Magic, Computational };

/// Positive operator representing a CP map in the unit-trace state
/// convention: Tr S = 1 and tracing out all outputs leaves I/d_in * 1/d_in.
struct ChoiOperator {
  ComplexMatrix op;
  ChoiBasis basis;
  std::vector<std::string> labels;
};

/// Orthogonal 4x4 rotation with determinant +1.
struct SO4Rotation {
  Eigen::Matrix4d r;
};

/// Report of a positive-partial-transpose check. `self_transpose_gap` is the
/// max-norm distance between the operator and its partial transpose.
struct PptReport {
  bool is_ppt;
  double min_eigenvalue;
  double self_transpose_gap;
};

/// Choi operator of the cloning map on reference x clone_a x clone_b
/// (magic-indexed 4x4x4 factors): the ancilla is traced out of the pure
/// 256-dim state built from the invariant tensor.
ChoiOperator choi_from_coeffs(const ClonerCoefficients& co);

/// Same construction from an arbitrary rank-4 tensor; the underlying
/// 256-dim vector is normalized to unit length.
ChoiOperator choi_from_tensor(const ClonerTensor& t);

/// Trace out the other clone and convert both remaining factors to
/// computational qubit pairs: a 16-dim operator with dims {2,2,2,2}
/// (reference qubits 1,2 then clone qubits 1,2). which is 'a' or 'b'.
ChoiOperator reduced_choi(const ChoiOperator& s, char which);

/// Partial transposition on qubit 1 of the reference and qubit 1 of the
/// clone. Reports the minimum eigenvalue of the transposed operator and its
/// distance from the original.
PptReport ppt_check(const ChoiOperator& s_reduced, double tol);

/// Fidelities (F_a, F_b) evaluated on the Choi operator through the
/// rotation-averaged overlap functional. Independent of the closed form.
std::pair<double, double> fidelities_from_choi(const ChoiOperator& s);

SO4Rotation random_so4(std::mt19937_64& rng);

/// Max over `trials` random R in SO(4) of |R x R x R x R applied to s - s|.
double covariance_check(const ClonerTensor& t, int trials, std::mt19937_64& rng);

/// Max clone concurrence over `trials` random pure product inputs.
double separability_scan(const ClonerCoefficients& co, int trials, std::mt19937_64& rng);

/// CSV round trip: header row with the factor dims, then one row per matrix
/// row with "re,im" pairs per entry.
void save_choi_csv(const ChoiOperator& s, const std::string& path);
ChoiOperator load_choi_csv(const std::string& path);

}  // namespace entclone
