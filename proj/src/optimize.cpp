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

#include "entclone/optimize.hpp"

#include <cmath>
#include <functional>
#include <future>
#include <stdexcept>
#include <thread>

namespace entclone {

namespace {

constexpr double kGolden = 0.6180339887498949;

// Golden-section maximization on [lo, hi]; f may return -inf for
// infeasible points.
template <class F>
double golden_max(F&& f, double lo, double hi, double xtol, double* argmax) {
  double x1 = hi - kGolden * (hi - lo);
  double x2 = lo + kGolden * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > xtol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGolden * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGolden * (hi - lo);
      f1 = f(x1);
    }
  }
  const double xm = 0.5 * (lo + hi);
  const double fm = f(xm);
  if (argmax) *argmax = (fm >= f1 && fm >= f2) ? xm : (f1 >= f2 ? x1 : x2);
  return std::max({fm, f1, f2});
}

double symmetric_fidelity(double a, double c) { return 7.0 * a * a + c * c + 4.0 * a * c; }

// ---------------------------------------------------------------------------
// Generic line-searched ascent with Barzilai-Borwein steps on a retracted
// manifold. ValGrad returns {value, gradient}; Retract maps an ambient point
// back onto the manifold.
// ---------------------------------------------------------------------------

struct AscentOut {
  Eigen::MatrixXcd x;
  double value;
  bool converged;
};

template <class ValGrad, class Retract>
AscentOut bb_ascend(Eigen::MatrixXcd x, ValGrad&& vg, Retract&& retract, int iters,
                    double rel_tol) {
  auto [val, grad] = vg(x);
  Eigen::MatrixXcd g = 2.0 * grad;  // d f = 2 Re <df/dconj(x), dconj(x)>
  double eta = 0.05;
  Eigen::MatrixXcd x_prev, g_prev;
  bool have_prev = false;
  int streak = 0;
  bool converged = false;
  Eigen::MatrixXcd x_best = x;
  double val_best = val;
  // Non-monotone acceptance window lets the BB step keep its spectral
  // behaviour; the best iterate is tracked separately.
  constexpr int kWindow = 6;
  std::array<double, kWindow> recent;
  recent.fill(val);
  int recent_pos = 0;
  for (int it = 0; it < iters; ++it) {
    if (have_prev) {
      const Eigen::MatrixXcd dx = x - x_prev;
      const Eigen::MatrixXcd dg = g - g_prev;
      const double denom = dg.squaredNorm();
      if (denom > 1e-300) {
        const double num = std::abs((dx.conjugate().cwiseProduct(dg)).sum().real());
        eta = std::clamp(num / denom, 1e-9, 5.0);
      }
    }
    const double reference = *std::min_element(recent.begin(), recent.end());
    Eigen::MatrixXcd x_next = retract(x + eta * g);
    auto [val_next, grad_next] = vg(x_next);
    Eigen::MatrixXcd g_next = 2.0 * grad_next;
    if (val_next < reference - 1e-14) {
      bool accepted = false;
      for (int tries = 0; tries < 50; ++tries) {
        eta *= 0.5;
        x_next = retract(x + eta * g);
        std::tie(val_next, grad_next) = vg(x_next);
        g_next = 2.0 * grad_next;
        if (val_next >= reference) {
          accepted = true;
          break;
        }
      }
      if (!accepted) break;
    }
    const double rel = (val_next - val) / std::max(std::abs(val), 1e-12);
    x_prev = x;
    g_prev = g;
    x = x_next;
    g = g_next;
    val = val_next;
    have_prev = true;
    if (val > val_best) {
      val_best = val;
      x_best = x;
    }
    recent[recent_pos] = val;
    recent_pos = (recent_pos + 1) % kWindow;
    streak = (std::abs(rel) < rel_tol) ? streak + 1 : 0;
    if (streak >= 5) {
      converged = true;
      break;
    }
  }
  return {std::move(x_best), val_best, converged};
}

// ---------------------------------------------------------------------------
// Exact average of the weighted fidelity over maximally entangled inputs.
// With V[(ijk),l] and real unit n, E[n_a n_b n_c n_d] =
// (d_ab d_cd + d_ac d_bd + d_ad d_bc)/24 collapses the average to three
// contractions per clone.
// ---------------------------------------------------------------------------

using Iso = Eigen::Matrix<Complex, 64, 4>;

int flat3(int i, int j, int k) { return (i * 4 + j) * 4 + k; }

std::pair<double, Iso> avg_fidelity_and_grad(const Iso& v, double p) {
  const double s1 = v.squaredNorm();
  Eigen::Matrix4cd ta = Eigen::Matrix4cd::Zero();  // ta(j,k) = sum_i V[(ijk),i]
  Eigen::Matrix4cd tb = Eigen::Matrix4cd::Zero();  // tb(i,k) = sum_j V[(ijk),j]
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        ta(j, k) += v(flat3(i, j, k), i);
        tb(i, k) += v(flat3(i, j, k), j);
      }
  double s2a = ta.squaredNorm(), s2b = tb.squaredNorm();
  Complex s3a = 0.0, s3b = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int m = 0; m < 4; ++m) {
          s3a += v(flat3(i, j, k), m) * std::conj(v(flat3(m, j, k), i));
          s3b += v(flat3(i, j, k), m) * std::conj(v(flat3(i, m, k), j));
        }
  const double fa = (s1 + s2a + s3a.real()) / 24.0;
  const double fb = (s1 + s2b + s3b.real()) / 24.0;

  Iso ga = v, gb = v;  // d s1 = V
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          if (i == l) ga(flat3(i, j, k), l) += ta(j, k);
          if (j == l) gb(flat3(i, j, k), l) += tb(i, k);
          ga(flat3(i, j, k), l) += v(flat3(l, j, k), i);
          gb(flat3(i, j, k), l) += v(flat3(i, l, k), j);
        }
  Iso grad = (p / 24.0) * ga + ((1.0 - p) / 24.0) * gb;
  return {p * fa + (1.0 - p) * fb, std::move(grad)};
}

Eigen::MatrixXcd polar_retract(const Eigen::MatrixXcd& v) {
  Eigen::MatrixXcd h = v.adjoint() * v;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
  Eigen::VectorXd w = eig.eigenvalues().cwiseMax(1e-300);
  return v * (eig.eigenvectors() * w.cwiseSqrt().cwiseInverse().asDiagonal() *
              eig.eigenvectors().adjoint());
}

Eigen::MatrixXcd random_isometry(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(64, 4);
  for (int r = 0; r < 64; ++r)
    for (int c = 0; c < 4; ++c) g(r, c) = Complex(gauss(rng), gauss(rng));
  return polar_retract(g);
}

// ---------------------------------------------------------------------------
// Clone concurrence and its gradient with respect to the magic-basis rho.
// tau = lam1 - lam2 - lam3 - lam4 of sqrt(sqrt(rho) conj(rho) sqrt(rho));
// d tau = Tr[P d rho] with Hermitian P assembled through the eigenbases of
// rho and of X = sqrt(rho) conj(rho) sqrt(rho).
// ---------------------------------------------------------------------------

struct TauGrad {
  double tau;
  Eigen::Matrix4cd p;
};

TauGrad tau_and_gradient(const Eigen::Matrix4cd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(rho);
  const Eigen::Vector4d r = eig.eigenvalues().cwiseMax(0.0);
  const Eigen::Vector4d sr = r.cwiseSqrt();
  const Eigen::Matrix4cd basis = eig.eigenvectors();
  const Eigen::Matrix4cd root = basis * sr.asDiagonal() * basis.adjoint();
  const Eigen::Matrix4cd rho_c = rho.conjugate();
  Eigen::Matrix4cd x = root * rho_c * root;
  x = 0.5 * (x + x.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig2(x);
  const Eigen::Vector4d mu = eig2.eigenvalues().cwiseMax(0.0);  // ascending
  const Eigen::Vector4d lam = mu.cwiseSqrt();
  const double tau = lam[3] - lam[2] - lam[1] - lam[0];

  Eigen::Vector4d inv_sqrt;
  for (int i = 0; i < 4; ++i) inv_sqrt[i] = mu[i] > 1e-12 ? 1.0 / std::sqrt(mu[i]) : 0.0;
  const Eigen::Matrix4cd x_m12 =
      eig2.eigenvectors() * inv_sqrt.asDiagonal() * eig2.eigenvectors().adjoint();
  const Eigen::Vector4cd top = eig2.eigenvectors().col(3);
  const Eigen::Matrix4cd k =
      top * top.adjoint() / std::max(lam[3], 1e-9) - 0.5 * x_m12;

  const Eigen::Matrix4cd w = rho_c * root * k + k * root * rho_c;
  const Eigen::Matrix4cd wq = basis.adjoint() * w * basis;
  Eigen::Matrix4cd p1q;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) p1q(b, a) = wq(b, a) / std::max(sr[a] + sr[b], 1e-8);
  const Eigen::Matrix4cd p1 = basis * p1q * basis.adjoint();
  const Eigen::Matrix4cd p2 = (root * k * root).transpose();
  Eigen::Matrix4cd p = p1 + p2;
  p = 0.5 * (p + p.adjoint()).eval();
  return {tau, p};
}

// Worst-clone concurrence gap for one input plus its gradient wrt conj(V).
struct SampleGrad {
  double tau;
  Iso grad;
};

SampleGrad sample_tau_grad(const Iso& v, const Eigen::Vector4d& n) {
  const Eigen::Vector4cd nc = n.cast<Complex>();
  Eigen::Matrix<Complex, 64, 1> phi = v * nc;
  const double norm2 = phi.squaredNorm();
  Eigen::Matrix<Complex, 64, 1> psi = phi / std::sqrt(norm2);
  auto [rho_a, rho_b] = clone_marginals_magic(psi);
  TauGrad a = tau_and_gradient(rho_a);
  TauGrad b = tau_and_gradient(rho_b);
  const bool use_b = b.tau < a.tau;
  const TauGrad& sel = use_b ? b : a;
  const Eigen::Matrix4cd& rho_sel = use_b ? rho_b : rho_a;

  Eigen::Matrix<Complex, 64, 1> gphi = Eigen::Matrix<Complex, 64, 1>::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        Complex acc = 0.0;
        for (int y = 0; y < 4; ++y) {
          acc += use_b ? sel.p(j, y) * psi[flat3(i, y, k)]
                       : sel.p(i, y) * psi[flat3(y, j, k)];
        }
        gphi[flat3(i, j, k)] = acc;
      }
  const double trace_term = (sel.p * rho_sel).trace().real();
  gphi = (gphi - trace_term * psi) / norm2;

  SampleGrad out;
  out.tau = sel.tau;
  out.grad = gphi * nc.transpose();
  return out;
}

// ---------------------------------------------------------------------------
// Double-Bell amplitude family: V(a) = sum_g a_g VB_g with the 16 basis
// isometries built from the two-qubit Pauli group in magic indices. Every
// unit amplitude vector is an exact isometry whose clone channels are
// mixtures of local unitaries.
// ---------------------------------------------------------------------------

const std::array<Iso, 16>& double_bell_basis() {
  static const std::array<Iso, 16> basis = [] {
    const Complex im{0.0, 1.0};
    std::array<Eigen::Matrix2cd, 4> sigma;
    sigma[0] = Eigen::Matrix2cd::Identity();
    sigma[1] << 0, 1, 1, 0;
    sigma[2] << 0, -im, im, 0;
    sigma[3] << 1, 0, 0, -1;
    const Eigen::Matrix4cd& m = magic_matrix();
    std::array<Iso, 16> out;
    int g = 0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu, ++g) {
        Eigen::Matrix4cd pauli = Eigen::Matrix4cd::Zero();
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
              for (int d = 0; d < 2; ++d)
                pauli(2 * a + b, 2 * c + d) = sigma[mu](a, c) * sigma[nu](b, d);
        const Eigen::Matrix4cd u = m.adjoint() * pauli * m;
        const Eigen::Matrix4cd uc = u.conjugate();
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
              for (int l = 0; l < 4; ++l)
                out[g](flat3(i, j, k), l) = 0.5 * u(i, l) * uc(j, k);
      }
    return out;
  }();
  return basis;
}

Iso ansatz_isometry(const Eigen::VectorXcd& amps) {
  const auto& basis = double_bell_basis();
  Iso v = Iso::Zero();
  for (int g = 0; g < 16; ++g) v += amps[g] * basis[g];
  return v;
}

std::vector<Eigen::Vector4d> me_input_grid(int count, std::uint64_t seed) {
  std::vector<Eigen::Vector4d> grid;
  for (int i = 0; i < 4; ++i) grid.push_back(Eigen::Vector4d::Unit(i));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (static_cast<int>(grid.size()) < count) {
    Eigen::Vector4d n;
    for (int i = 0; i < 4; ++i) n[i] = gauss(rng);
    if (n.norm() < 1e-6) continue;
    grid.push_back(n.normalized());
  }
  return grid;
}

// Chain a gradient wrt conj(V) to the amplitudes:
// d conj(V) = sum_g d conj(a_g) conj(VB_g).
Eigen::MatrixXcd chain_to_amplitudes(const Iso& gv) {
  const auto& basis = double_bell_basis();
  Eigen::MatrixXcd ga(16, 1);
  for (int g = 0; g < 16; ++g) ga(g, 0) = basis[g].conjugate().cwiseProduct(gv).sum();
  return ga;
}

// Soft minimum of the per-input tau over the grid, with gradient wrt the
// conjugate amplitudes.
std::pair<double, Eigen::MatrixXcd> ansatz_softmin_grad(
    const Eigen::VectorXcd& amps, const std::vector<Eigen::Vector4d>& grid, double kappa) {
  const Iso v = ansatz_isometry(amps);
  const int m = static_cast<int>(grid.size());
  std::vector<SampleGrad> samples;
  samples.reserve(m);
  double tau_min = 1e300;
  for (const auto& n : grid) {
    samples.push_back(sample_tau_grad(v, n));
    tau_min = std::min(tau_min, samples.back().tau);
  }
  double weight_sum = 0.0;
  std::vector<double> weights(m);
  for (int s = 0; s < m; ++s) {
    weights[s] = std::exp(-kappa * (samples[s].tau - tau_min));
    weight_sum += weights[s];
  }
  const double value = tau_min - std::log(weight_sum / m) / kappa;
  Iso gv = Iso::Zero();
  for (int s = 0; s < m; ++s) gv += (weights[s] / weight_sum) * samples[s].grad;
  return {value, chain_to_amplitudes(gv)};
}

// Mean tau minus gamma times its variance across the grid. Smooth, with the
// same maximizer as the hard worst case once gamma is large: the optimum
// landscape is flat across the maximally entangled manifold.
std::pair<double, Eigen::MatrixXcd> ansatz_meanvar_grad(
    const Eigen::VectorXcd& amps, const std::vector<Eigen::Vector4d>& grid, double gamma) {
  const Iso v = ansatz_isometry(amps);
  const int m = static_cast<int>(grid.size());
  std::vector<SampleGrad> samples;
  samples.reserve(m);
  double mean = 0.0;
  for (const auto& n : grid) {
    samples.push_back(sample_tau_grad(v, n));
    mean += samples.back().tau / m;
  }
  double var = 0.0;
  for (const auto& s : samples) var += (s.tau - mean) * (s.tau - mean) / m;
  Iso gv = Iso::Zero();
  for (const auto& s : samples) {
    gv += ((1.0 - 2.0 * gamma * (s.tau - mean)) / m) * s.grad;
  }
  return {mean - gamma * var, chain_to_amplitudes(gv)};
}

double ansatz_worst_clamped(const Eigen::VectorXcd& amps,
                            const std::vector<Eigen::Vector4d>& grid) {
  const Iso v = ansatz_isometry(amps);
  double worst = 1e300;
  for (const auto& n : grid) {
    Eigen::VectorXcd psi = v * n.cast<Complex>();
    psi /= psi.norm();
    auto [rho_a, rho_b] = clone_marginals_magic(psi);
    worst = std::min({worst, concurrence_magic(rho_a), concurrence_magic(rho_b)});
  }
  return worst;
}

// Greedy coordinate pattern search on the amplitude sphere, directly on the
// clamped worst case. Cleans up the soft-minimum tail, which stalls on the
// kinks of the hard minimum.
double polish_pattern(Eigen::VectorXcd& amps, const std::vector<Eigen::Vector4d>& grid) {
  double val = ansatz_worst_clamped(amps, grid);
  double step = 0.02;
  while (step > 3e-8) {
    bool improved = false;
    for (int g = 0; g < 16 && !improved; ++g) {
      const Complex deltas[4] = {{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}};
      for (const Complex& delta : deltas) {
        Eigen::VectorXcd cand = amps;
        cand[g] += delta;
        cand /= cand.norm();
        const double v = ansatz_worst_clamped(cand, grid);
        if (v > val + 1e-15) {
          amps = cand;
          val = v;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return val;
}

std::uint64_t restart_seed(std::uint64_t base, int restart) {
  return base ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(restart + 1));
}

struct RestartOut {
  double value;
  Eigen::VectorXd parameters;
  bool converged;
};

RestartOut fidelity_restart(double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Eigen::MatrixXcd v0 = random_isometry(rng);
  auto vg = [p](const Eigen::MatrixXcd& v) {
    auto [val, grad] = avg_fidelity_and_grad(v, p);
    return std::pair<double, Eigen::MatrixXcd>(val, std::move(grad));
  };
  AscentOut out = bb_ascend(v0, vg, polar_retract, 4000, 1e-12);
  Eigen::VectorXd params(512);
  for (int c = 0, e = 0; c < 4; ++c)
    for (int r = 0; r < 64; ++r, ++e) {
      params[e] = out.x(r, c).real();
      params[256 + e] = out.x(r, c).imag();
    }
  return {out.value, std::move(params), out.converged};
}

RestartOut concurrence_restart(const std::vector<Eigen::Vector4d>& grid,
                               const std::vector<Eigen::Vector4d>& holdout,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd amps(16, 1);
  for (int g = 0; g < 16; ++g) amps(g, 0) = Complex(gauss(rng), gauss(rng));
  amps /= amps.norm();
  auto renorm = [](const Eigen::MatrixXcd& a) { return a / a.norm(); };
  bool converged = false;
  {
    auto vg = [&grid](const Eigen::MatrixXcd& a) {
      return ansatz_softmin_grad(a.col(0), grid, 150.0);
    };
    amps = bb_ascend(amps, vg, renorm, 400, 1e-12).x;
  }
  // Cycling the variance weight avoids freezing inside the stiff
  // equal-value valley: low-gamma stages move along the uniform manifold,
  // high-gamma stages re-equalize.
  const std::pair<double, int> schedule[] = {
      {30.0, 400},   {1000.0, 300}, {0.0, 120},    {30000.0, 300},
      {0.0, 120},    {1.0e6, 300},  {0.0, 80},     {1.0e6, 300},
      {0.0, 80},     {1.0e6, 300},  {0.0, 60},     {3.0e7, 400}};
  for (const auto& [gamma, iters] : schedule) {
    auto vg = [&grid, gamma = gamma](const Eigen::MatrixXcd& a) {
      return ansatz_meanvar_grad(a.col(0), grid, gamma);
    };
    AscentOut out = bb_ascend(amps, vg, renorm, iters, 1e-12);
    amps = out.x;
    converged = out.converged;
  }
  Eigen::VectorXcd best_amps = amps.col(0);
  double train_value = ansatz_worst_clamped(best_amps, grid);
  if (train_value > 0.40) {
    train_value = polish_pattern(best_amps, grid);
    converged = true;
  }
  const double holdout_value = ansatz_worst_clamped(best_amps, holdout);
#ifdef ENTCLONE_DEBUG_ISOMETRY
  {
    const Iso vdbg = ansatz_isometry(best_amps);
    double tmin = 1e300, tmax = -1e300, tsum = 0.0;
    for (const auto& n : grid) {
      const double t = sample_tau_grad(vdbg, n).tau;
      tmin = std::min(tmin, t);
      tmax = std::max(tmax, t);
      tsum += t;
    }
    fprintf(stderr, "restart train=%.9f holdout=%.9f mean=%.9f spread=[%.2e,%.2e]\n",
            train_value, holdout_value, tsum / grid.size(),
            tsum / grid.size() - tmin, tmax - tsum / grid.size());
  }
#endif
  double value = std::min(train_value, holdout_value);
  Eigen::VectorXd params(32);
  for (int g = 0; g < 16; ++g) {
    params[g] = best_amps[g].real();
    params[16 + g] = best_amps[g].imag();
  }
  return {value, std::move(params), converged};
}

}  // namespace

ClonerCoefficients optimize_symmetric() {
  // Constraint for A = B real: 10 A^2 + 4 A C + 4 C^2 = 1.
  Eigen::Matrix2d q;
  q << 10.0, 2.0, 2.0, 4.0;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(q);
  const Eigen::Vector2d scale = eig.eigenvalues().cwiseSqrt().cwiseInverse();
  const Eigen::Matrix2d axes = eig.eigenvectors();
  auto point = [&](double theta) {
    Eigen::Vector2d u(std::cos(theta) * scale[0], std::sin(theta) * scale[1]);
    Eigen::Vector2d ac = axes * u;
    return ac;
  };
  auto objective = [&](double theta) {
    Eigen::Vector2d ac = point(theta);
    return symmetric_fidelity(ac[0], ac[1]);
  };
  const int coarse = 2048;
  double best_theta = 0.0, best = -1e300;
  for (int i = 0; i < coarse; ++i) {
    const double theta = 2.0 * M_PI * i / coarse;
    const double val = objective(theta);
    if (val > best) {
      best = val;
      best_theta = theta;
    }
  }
  const double step = 2.0 * M_PI / coarse;
  double theta_opt = best_theta;
  golden_max(objective, best_theta - step, best_theta + step, 1e-12, &theta_opt);
  Eigen::Vector2d ac = point(theta_opt);
  if (ac[0] < 0.0) ac = -ac;
  return {ac[0], ac[0], ac[1]};
}

SearchResult optimize_weighted(double p) {
  if (p < 0.0 || p > 1.0) throw std::domain_error("optimize_weighted: p outside [0,1]");
  // Constraint quadric for real (A, B, C).
  Eigen::Matrix3d q;
  q << 4.0, 1.0, 1.0, 1.0, 4.0, 1.0, 1.0, 1.0, 4.0;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(q);
  const Eigen::Vector3d scale = eig.eigenvalues().cwiseSqrt().cwiseInverse();
  const Eigen::Matrix3d axes = eig.eigenvectors();
  auto coeffs = [&](double theta, double phi) {
    Eigen::Vector3d u(std::cos(theta), std::sin(theta) * std::cos(phi),
                      std::sin(theta) * std::sin(phi));
    Eigen::Vector3d abc = axes * (u.cwiseProduct(scale));
    return abc;
  };
  auto objective = [&](double theta, double phi) {
    Eigen::Vector3d abc = coeffs(theta, phi);
    auto [fa, fb] = fidelities_closed_form({abc[0], abc[1], abc[2]});
    return p * fa + (1.0 - p) * fb;
  };

  double best = -1e300;
  Eigen::Vector3d best_abc = Eigen::Vector3d::Zero();
  bool best_converged = false;
  const double h = 1e-6;
  for (int ti = 0; ti < 7; ++ti) {
    for (int pi = 0; pi < 12; ++pi) {
      double theta = M_PI * (ti + 0.5) / 7.0;
      double phi = 2.0 * M_PI * pi / 12.0;
      double val = objective(theta, phi);
      double eta = 0.1;
      int streak = 0;
      bool converged = false;
      for (int it = 0; it < 500; ++it) {
        const double gt = (objective(theta + h, phi) - val) / h;
        const double gp = (objective(theta, phi + h) - val) / h;
        bool improved = false;
        double vn = val, tn = theta, pn = phi;
        for (int tries = 0; tries < 40; ++tries) {
          tn = theta + eta * gt;
          pn = phi + eta * gp;
          vn = objective(tn, pn);
          if (vn > val) {
            improved = true;
            break;
          }
          eta *= 0.5;
        }
        if (!improved) {
          converged = true;
          break;
        }
        const double rel = (vn - val) / std::max(std::abs(val), 1e-12);
        theta = tn;
        phi = pn;
        val = vn;
        eta *= 1.3;
        streak = (rel < 1e-10) ? streak + 1 : 0;
        if (streak >= 5) {
          converged = true;
          break;
        }
      }
      if (val > best) {
        best = val;
        best_abc = coeffs(theta, phi);
        best_converged = converged;
      }
    }
  }
  SearchResult out;
  out.objective_value = best;
  out.parameters = best_abc;
  out.restarts_used = 84;
  out.converged = best_converged;
  return out;
}

TradeoffMax max_tradeoff_fa(double f_b) {
  if (f_b < 0.25 - 1e-12 || f_b > 1.0 + 1e-12) {
    throw std::domain_error("max_tradeoff_fa: F_b outside [1/4, 1]");
  }
  const double b_max = std::sqrt(f_b / 3.0);
  auto safe = [f_b](double b) {
    try {
      return tradeoff_fa(b, f_b);
    } catch (const std::domain_error&) {
      return -1e300;
    }
  };
  const int scan = 2000;
  double best = -1e300, best_b = 0.0;
  for (int i = 0; i <= scan; ++i) {
    const double b = b_max * i / scan;
    const double val = safe(b);
    if (val > best) {
      best = val;
      best_b = b;
    }
  }
  const double width = b_max / scan;
  double refined_b = best_b;
  const double refined =
      golden_max(safe, std::max(0.0, best_b - width), std::min(b_max, best_b + width),
                 1e-12, &refined_b);
  if (refined > best) {
    best = refined;
    best_b = refined_b;
  }
  return {best, best_b};
}

std::vector<TradeoffPoint> sweep_fig1(int points) {
  if (points < 2) throw std::invalid_argument("sweep_fig1: points must be >= 2");
  const double f_sym = (5.0 + std::sqrt(13.0)) / 12.0;
  std::vector<double> grid(points);
  int nearest = 0;
  for (int i = 0; i < points; ++i) {
    grid[i] = 0.25 + 0.75 * i / (points - 1);
    if (std::abs(grid[i] - f_sym) < std::abs(grid[nearest] - f_sym)) nearest = i;
  }
  grid[nearest] = f_sym;  // the frontier sweep carries the symmetric point exactly
  std::vector<TradeoffPoint> out;
  out.reserve(points);
  for (double f_b : grid) {
    TradeoffMax m = max_tradeoff_fa(f_b);
    TradeoffPoint pt;
    pt.f_b = f_b;
    pt.f_a = m.f_a;
    pt.b_coeff = m.b_coeff;
    pt.e_a = eof_from_concurrence(std::max(0.0, 2.0 * m.f_a - 1.0));
    pt.e_b = eof_from_concurrence(std::max(0.0, 2.0 * f_b - 1.0));
    out.push_back(pt);
  }
  return out;
}

double find_fb_where_ea_vanishes() {
  double lo = 0.717, hi = 1.0;  // F_a above 1/2 at lo, below at hi
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    if (max_tradeoff_fa(mid).f_a > 0.5) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

MagicCoefficients schmidt_input(double alpha) {
  const double beta = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
  const double s = 1.0 / std::sqrt(2.0);
  MagicCoefficients n;
  n.n << Complex(s * (alpha + beta), 0.0), Complex(0.0, s * (beta - alpha)), 0.0, 0.0;
  return n;
}

double clone_tau_at_alpha(double alpha, const ClonerCoefficients& co) {
  Eigen::VectorXcd psi = apply_cloner(schmidt_input(alpha), co);
  auto [rho_a, rho_b] = clone_marginals_magic(psi);
  (void)rho_b;
  return concurrence_unclamped_magic(rho_a);
}

}  // namespace

std::vector<Fig2Point> sweep_fig2(int points) {
  if (points < 2) throw std::invalid_argument("sweep_fig2: points must be >= 2");
  const ClonerCoefficients co = optimal_symmetric_coeffs();
  std::vector<Fig2Point> out;
  out.reserve(points);
  const double lo = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < points; ++i) {
    const double alpha = 1.0 - (1.0 - lo) * i / (points - 1);  // E_in rises from 0 to 1
    MagicCoefficients n = schmidt_input(alpha);
    ClonePair pair = clone_pair(n, co);
    Fig2Point pt;
    pt.e_in = eof_from_concurrence(2.0 * alpha * std::sqrt(1.0 - alpha * alpha));
    pt.e_out = eof_from_concurrence(concurrence_mixed(pair.rho_a));
    out.push_back(pt);
  }
  return out;
}

double find_critical_input_entanglement() {
  const ClonerCoefficients co = optimal_symmetric_coeffs();
  double lo = 1.0 / std::sqrt(2.0);  // entangled clones here
  double hi = 1.0;                   // separable clones here
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (clone_tau_at_alpha(mid, co) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double alpha = 0.5 * (lo + hi);
  return eof_from_concurrence(2.0 * alpha * std::sqrt(1.0 - alpha * alpha));
}

SearchResult optimize_isometry(const IsometryObjective& objective, int restarts,
                               std::uint64_t seed) {
  if (restarts < 1) throw std::invalid_argument("optimize_isometry: restarts must be >= 1");
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());

  std::vector<Eigen::Vector4d> grid, holdout;
  if (objective.kind == IsometryObjective::Kind::CloneConcurrence) {
    grid = me_input_grid(64, seed ^ 0xA5A5A5A5ULL);
    holdout = me_input_grid(512, seed ^ 0x5A5A5A5AULL);
  }

  auto run_one = [&](int restart) -> RestartOut {
    const std::uint64_t rs = restart_seed(seed, restart);
    if (objective.kind == IsometryObjective::Kind::WeightedFidelity) {
      return fidelity_restart(objective.p, rs);
    }
    return concurrence_restart(grid, holdout, rs);
  };

  std::vector<RestartOut> results(restarts);
  int next = 0;
  while (next < restarts) {
    const int batch = std::min<int>(workers, restarts - next);
    std::vector<std::future<RestartOut>> futs;
    futs.reserve(batch);
    for (int k = 0; k < batch; ++k) {
      futs.push_back(std::async(std::launch::async, run_one, next + k));
    }
    for (int k = 0; k < batch; ++k) results[next + k] = futs[k].get();
    next += batch;
  }

  int best = 0;
  for (int rIdx = 1; rIdx < restarts; ++rIdx) {
    if (results[rIdx].value > results[best].value) best = rIdx;
  }
  SearchResult out;
  out.objective_value = results[best].value;
  out.parameters = results[best].parameters;
  out.restarts_used = restarts;
  out.converged = results[best].converged;
  return out;
}

}  // namespace entclone
