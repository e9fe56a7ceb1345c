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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace entclone {

using Complex = std::complex<double>;

/// Dense complex matrix over an ordered list of subsystem factors.
/// The side length equals the product of `dims`; the first factor is the
/// slowest-varying index. All entries must be finite.
struct ComplexMatrix {
  Eigen::MatrixXcd data;
  std::vector<Eigen::Index> dims;

  ComplexMatrix() = default;
  ComplexMatrix(Eigen::MatrixXcd m, std::vector<Eigen::Index> d);

  Eigen::Index size() const { return data.rows(); }
};

/// Result of a Hermitian eigendecomposition. Eigenvalues are sorted in
/// decreasing order; eigenvector columns match that order.
struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
};

/// Largest absolute entry of m.
double max_abs(const Eigen::MatrixXcd& m);

/// Largest absolute entry of m - m^dag.
double hermiticity_gap(const Eigen::MatrixXcd& m);

/// Tensor product; dims are concatenated.
ComplexMatrix kron(const ComplexMatrix& m, const ComplexMatrix& n);

/// Trace out every factor not listed in `keep` (ascending subsystem
/// indices). The total trace is preserved.
ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<int>& keep);

/// Transpose the listed factors only. Involutive.
ComplexMatrix partial_transpose(const ComplexMatrix& m, const std::vector<int>& subsystems);

/// Eigendecomposition of a Hermitian matrix (gap below 1e-10 required).
EigenDecomposition hermitian_eig(const ComplexMatrix& m);

/// PSD square root. Eigenvalues in [-1e-9, 0) are clamped to zero; anything
/// below -1e-9 is rejected as genuinely non-positive.
ComplexMatrix sqrt_psd(const ComplexMatrix& m);

/// True iff the minimum eigenvalue of Hermitian m is >= -tol.
bool is_psd(const ComplexMatrix& m, double tol);

}  // namespace entclone
