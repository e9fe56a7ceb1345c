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

#include "entclone/qmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace entclone {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kPsdClamp = 1e-9;

void check_subsystems(const ComplexMatrix& m, const std::vector<int>& subs) {
  for (int s : subs) {
    if (s < 0 || s >= static_cast<int>(m.dims.size())) {
      throw std::out_of_range("subsystem index out of range");
    }
  }
}

// Decompose a flat index into per-factor digits (first factor slowest).
void unflatten(Eigen::Index flat, const std::vector<Eigen::Index>& dims,
               std::vector<Eigen::Index>& out) {
  for (std::size_t f = dims.size(); f-- > 0;) {
    out[f] = flat % dims[f];
    flat /= dims[f];
  }
}

Eigen::Index flatten(const std::vector<Eigen::Index>& digits,
                     const std::vector<Eigen::Index>& dims) {
  Eigen::Index flat = 0;
  for (std::size_t f = 0; f < dims.size(); ++f) flat = flat * dims[f] + digits[f];
  return flat;
}

}  // namespace

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd m, std::vector<Eigen::Index> d)
    : data(std::move(m)), dims(std::move(d)) {
  if (data.rows() != data.cols()) throw std::invalid_argument("matrix must be square");
  Eigen::Index prod = 1;
  for (Eigen::Index dim : dims) prod *= dim;
  if (prod != data.rows()) {
    throw std::invalid_argument("product of dims must equal the side length");
  }
  if (!data.allFinite()) throw std::invalid_argument("entries must be finite");
}

double max_abs(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_gap(const Eigen::MatrixXcd& m) {
  return max_abs(m - m.adjoint());
}

ComplexMatrix kron(const ComplexMatrix& m, const ComplexMatrix& n) {
  Eigen::MatrixXcd out(m.size() * n.size(), m.size() * n.size());
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    for (Eigen::Index j = 0; j < m.size(); ++j) {
      out.block(i * n.size(), j * n.size(), n.size(), n.size()) = m.data(i, j) * n.data;
    }
  }
  std::vector<Eigen::Index> dims = m.dims;
  dims.insert(dims.end(), n.dims.begin(), n.dims.end());
  return {std::move(out), std::move(dims)};
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<int>& keep) {
  check_subsystems(m, keep);
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

  std::vector<int> traced;
  for (int f = 0; f < static_cast<int>(m.dims.size()); ++f) {
    if (!std::binary_search(kept.begin(), kept.end(), f)) traced.push_back(f);
  }

  std::vector<Eigen::Index> kept_dims, traced_dims;
  for (int f : kept) kept_dims.push_back(m.dims[f]);
  for (int f : traced) traced_dims.push_back(m.dims[f]);
  Eigen::Index out_size = 1, traced_size = 1;
  for (Eigen::Index d : kept_dims) out_size *= d;
  for (Eigen::Index d : traced_dims) traced_size *= d;

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(out_size, out_size);
  std::vector<Eigen::Index> row(m.dims.size()), col(m.dims.size());
  std::vector<Eigen::Index> kd(kept.size()), kd2(kept.size()), td(traced.size());
  for (Eigen::Index r = 0; r < out_size; ++r) {
    unflatten(r, kept_dims, kd);
    for (Eigen::Index c = 0; c < out_size; ++c) {
      unflatten(c, kept_dims, kd2);
      Complex acc = 0.0;
      for (Eigen::Index t = 0; t < traced_size; ++t) {
        unflatten(t, traced_dims, td);
        for (std::size_t f = 0; f < kept.size(); ++f) {
          row[kept[f]] = kd[f];
          col[kept[f]] = kd2[f];
        }
        for (std::size_t f = 0; f < traced.size(); ++f) {
          row[traced[f]] = td[f];
          col[traced[f]] = td[f];
        }
        acc += m.data(flatten(row, m.dims), flatten(col, m.dims));
      }
      out(r, c) = acc;
    }
  }
  return {std::move(out), std::move(kept_dims)};
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const std::vector<int>& subsystems) {
  check_subsystems(m, subsystems);
  Eigen::MatrixXcd out(m.size(), m.size());
  std::vector<Eigen::Index> row(m.dims.size()), col(m.dims.size());
  for (Eigen::Index r = 0; r < m.size(); ++r) {
    unflatten(r, m.dims, row);
    for (Eigen::Index c = 0; c < m.size(); ++c) {
      unflatten(c, m.dims, col);
      std::vector<Eigen::Index> tr = row, tc = col;
      for (int f : subsystems) std::swap(tr[f], tc[f]);
      out(flatten(tr, m.dims), flatten(tc, m.dims)) = m.data(r, c);
    }
  }
  return {std::move(out), m.dims};
}

EigenDecomposition hermitian_eig(const ComplexMatrix& m) {
  if (hermiticity_gap(m.data) >= kHermTol) {
    throw std::invalid_argument("matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.data);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  // Eigen sorts ascending; flip to decreasing.
  EigenDecomposition out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

ComplexMatrix sqrt_psd(const ComplexMatrix& m) {
  EigenDecomposition eig = hermitian_eig(m);
  Eigen::VectorXd vals = eig.eigenvalues;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals[i] < -kPsdClamp) throw std::domain_error("matrix is not PSD");
    if (vals[i] < 0.0) vals[i] = 0.0;
  }
  Eigen::MatrixXcd root = eig.eigenvectors * vals.cwiseSqrt().asDiagonal() *
                          eig.eigenvectors.adjoint();
  return {std::move(root), m.dims};
}

bool is_psd(const ComplexMatrix& m, double tol) {
  EigenDecomposition eig = hermitian_eig(m);
  return eig.eigenvalues[eig.eigenvalues.size() - 1] >= -tol;
}

}  // namespace entclone
