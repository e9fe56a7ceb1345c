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

#include "entclone/channels.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace entclone {

namespace {

// |S> = 1/2 sum s_ijkl |l>_R |i>_a |j>_b |k>_anc, then S = Tr_anc |S><S|.
ChoiOperator choi_from_vector(const Eigen::VectorXcd& v) {
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(64, 64);
  // v indexed by ((l*4+i)*4+j)*4+k; trace over k.
  for (int r = 0; r < 64; ++r) {
    for (int c = 0; c < 64; ++c) {
      Complex acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += v[r * 4 + k] * std::conj(v[c * 4 + k]);
      s(r, c) = acc;
    }
  }
  return {ComplexMatrix{std::move(s), {4, 4, 4}}, ChoiBasis::Magic, {"R", "a", "b"}};
}

Eigen::VectorXcd tensor_to_choi_vector(const ClonerTensor& t) {
  Eigen::VectorXcd v(256);
  for (int l = 0; l < 4; ++l)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          v[((l * 4 + i) * 4 + j) * 4 + k] = t.at(i, j, k, l);
  return v;
}

// sum_l |l>|l> on a magic-indexed pair.
Eigen::VectorXcd unnormalized_me_vector() {
  Eigen::VectorXcd omega = Eigen::VectorXcd::Zero(16);
  for (int l = 0; l < 4; ++l) omega[l * 4 + l] = 1.0;
  return omega;
}

Eigen::MatrixXcd swap_16() {
  Eigen::MatrixXcd sw = Eigen::MatrixXcd::Zero(16, 16);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) sw(x * 4 + y, y * 4 + x) = 1.0;
  return sw;
}

}  // namespace

ChoiOperator choi_from_coeffs(const ClonerCoefficients& co) {
  if (co.normalization_residual() > 1e-8) {
    throw std::invalid_argument("cloner coefficients are not normalized");
  }
  Eigen::VectorXcd v = tensor_to_choi_vector(tensor_from_coeffs(co));
  // Normalization of the coefficients makes the 256-dim vector have norm 2.
  v *= 0.5;
  return choi_from_vector(v);
}

ChoiOperator choi_from_tensor(const ClonerTensor& t) {
  Eigen::VectorXcd v = tensor_to_choi_vector(t);
  const double norm = v.norm();
  if (norm < 1e-12) throw std::invalid_argument("tensor is zero");
  v /= norm;
  return choi_from_vector(v);
}

ChoiOperator reduced_choi(const ChoiOperator& s, char which) {
  if (which != 'a' && which != 'b') throw std::invalid_argument("clone label must be a or b");
  if (s.basis != ChoiBasis::Magic || s.op.size() != 64) {
    throw std::invalid_argument("expected the 64-dim magic-indexed cloning Choi");
  }
  // Factors are R, a, b; keep R and the selected clone.
  ComplexMatrix red = partial_trace(s.op, which == 'a' ? std::vector<int>{0, 1}
                                                       : std::vector<int>{0, 2});
  const Eigen::Matrix4cd& m = magic_matrix();
  ComplexMatrix mm = kron(ComplexMatrix{m, {2, 2}}, ComplexMatrix{m, {2, 2}});
  Eigen::MatrixXcd comp = mm.data * red.data * mm.data.adjoint();
  return {ComplexMatrix{std::move(comp), {2, 2, 2, 2}},
          ChoiBasis::Computational,
          {"R1", "R2", std::string(1, which) + "1", std::string(1, which) + "2"}};
}

PptReport ppt_check(const ChoiOperator& s_reduced, double tol) {
  if (s_reduced.op.size() != 16 || s_reduced.op.dims != std::vector<Eigen::Index>{2, 2, 2, 2} ||
      s_reduced.basis != ChoiBasis::Computational) {
    throw std::invalid_argument("expected a 16-dim operator with qubit factors");
  }
  ComplexMatrix transposed = partial_transpose(s_reduced.op, {0, 2});
  EigenDecomposition eig = hermitian_eig(transposed);
  PptReport report;
  report.min_eigenvalue = eig.eigenvalues[eig.eigenvalues.size() - 1];
  report.self_transpose_gap = max_abs(transposed.data - s_reduced.op.data);
  report.is_ppt = report.min_eigenvalue >= -tol;
  return report;
}

std::pair<double, double> fidelities_from_choi(const ChoiOperator& s) {
  // Averaging |n*><n*| x |n><n| over real unit n gives
  // (|omega><omega| + I + SWAP)/24 on the reference-clone pair, so
  // F_x = Tr[S_x (|omega><omega| + I + SWAP)] / 6.
  Eigen::VectorXcd omega = unnormalized_me_vector();
  Eigen::MatrixXcd overlap_op =
      (omega * omega.adjoint() + Eigen::MatrixXcd::Identity(16, 16) + swap_16()) / 6.0;
  auto fidelity = [&](char which) {
    ComplexMatrix red = partial_trace(s.op, which == 'a' ? std::vector<int>{0, 1}
                                                         : std::vector<int>{0, 2});
    return (overlap_op * red.data).trace().real();
  };
  if (s.basis != ChoiBasis::Magic || s.op.size() != 64) {
    throw std::invalid_argument("expected the 64-dim magic-indexed cloning Choi");
  }
  return {fidelity('a'), fidelity('b')};
}

SO4Rotation random_so4(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Matrix4d g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = gauss(rng);
  Eigen::HouseholderQR<Eigen::Matrix4d> qr(g);
  Eigen::Matrix4d q = qr.householderQ();
  Eigen::Matrix4d r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the sign convention so the sample is Haar distributed.
  for (int i = 0; i < 4; ++i) {
    if (r(i, i) < 0.0) q.col(i) *= -1.0;
  }
  if (q.determinant() < 0.0) q.col(0) *= -1.0;
  return {q};
}

double covariance_check(const ClonerTensor& t, int trials, std::mt19937_64& rng) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  double worst = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    const Eigen::Matrix4d r = random_so4(rng).r;
    // Contract one index at a time: s' = R x R x R x R applied to s.
    std::array<Complex, 256> cur = t.s;
    std::array<Complex, 256> next;
    for (int mode = 0; mode < 4; ++mode) {
      next.fill(0.0);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          for (int k = 0; k < 4; ++k)
            for (int l = 0; l < 4; ++l) {
              int idx[4] = {i, j, k, l};
              Complex acc = 0.0;
              for (int p = 0; p < 4; ++p) {
                int src[4] = {i, j, k, l};
                src[mode] = p;
                acc += r(idx[mode], p) * cur[((src[0] * 4 + src[1]) * 4 + src[2]) * 4 + src[3]];
              }
              next[((i * 4 + j) * 4 + k) * 4 + l] = acc;
            }
      cur = next;
    }
    for (int e = 0; e < 256; ++e) {
      worst = std::max(worst, std::abs(cur[e] - t.s[e]));
    }
  }
  return worst;
}

double separability_scan(const ClonerCoefficients& co, int trials, std::mt19937_64& rng) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  double worst = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    MagicCoefficients n = to_magic(random_product_state(rng));
    ClonePair pair = clone_pair(n, co);
    worst = std::max({worst, concurrence_mixed(pair.rho_a), concurrence_mixed(pair.rho_b)});
  }
  return worst;
}

void save_choi_csv(const ChoiOperator& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "dims";
  for (Eigen::Index d : s.op.dims) out << "," << d;
  out << "\n";
  out.precision(17);
  for (Eigen::Index r = 0; r < s.op.size(); ++r) {
    for (Eigen::Index c = 0; c < s.op.size(); ++c) {
      if (c > 0) out << ",";
      out << s.op.data(r, c).real() << "," << s.op.data(r, c).imag();
    }
    out << "\n";
  }
  if (!out) throw std::runtime_error("failed writing " + path);
}

ChoiOperator load_choi_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty Choi CSV");
  std::vector<Eigen::Index> dims;
  {
    std::stringstream ss(line);
    std::string tok;
    std::getline(ss, tok, ',');
    if (tok != "dims") throw std::runtime_error("missing dims header in Choi CSV");
    while (std::getline(ss, tok, ',')) dims.push_back(std::stoll(tok));
  }
  Eigen::Index size = 1;
  for (Eigen::Index d : dims) size *= d;
  Eigen::MatrixXcd data(size, size);
  for (Eigen::Index r = 0; r < size; ++r) {
    if (!std::getline(in, line)) throw std::runtime_error("truncated Choi CSV");
    std::stringstream ss(line);
    std::string tok;
    for (Eigen::Index c = 0; c < size; ++c) {
      if (!std::getline(ss, tok, ',')) throw std::runtime_error("short row in Choi CSV");
      const double re = std::stod(tok);
      if (!std::getline(ss, tok, ',')) throw std::runtime_error("short row in Choi CSV");
      const double im = std::stod(tok);
      data(r, c) = Complex(re, im);
    }
  }
  ChoiBasis basis = (size == 64) ? ChoiBasis::Magic : ChoiBasis::Computational;
  std::vector<std::string> labels;
  if (size == 64) labels = {"R", "a", "b"};
  return {ComplexMatrix{std::move(data), std::move(dims)}, basis, std::move(labels)};
}

}  // namespace entclone
