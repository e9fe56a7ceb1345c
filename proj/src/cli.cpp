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

#include "entclone/cli.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "entclone/channels.hpp"
#include "entclone/optimize.hpp"

namespace entclone {

namespace {

std::string fmt(double v) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(9) << v;
  std::string s = ss.str();
  if (s == "-0.000000000") s = "0.000000000";
  return s;
}

std::string fmt_exp(double v) {
  std::ostringstream ss;
  ss << std::scientific << std::setprecision(3) << v;
  return ss.str();
}

double weighted_frontier_target(double p) {
  auto g = [p](double f_b) { return p * max_tradeoff_fa(f_b).f_a + (1.0 - p) * f_b; };
  const int scan = 400;
  double best = -1e300;
  double best_fb = 0.25;
  for (int i = 0; i <= scan; ++i) {
    const double f_b = 0.25 + 0.75 * i / scan;
    const double val = g(f_b);
    if (val > best) {
      best = val;
      best_fb = f_b;
    }
  }
  const double w = 0.75 / scan;
  for (double f_b = std::max(0.25, best_fb - w); f_b <= std::min(1.0, best_fb + w);
       f_b += w / 50.0) {
    best = std::max(best, g(f_b));
  }
  return best;
}

}  // namespace

void run_constants(std::ostream& out) {
  const ClonerCoefficients co = optimal_symmetric_coeffs();
  const auto [f_opt, f_opt_b] = fidelities_closed_form(co);
  (void)f_opt_b;
  const double c_clone = 2.0 * f_opt - 1.0;
  const double f_local = 7.0 / 12.0;
  const double c_local = 1.0 / 6.0;
  out << "F_opt," << fmt(f_opt) << "\n";
  out << "A_opt," << fmt(co.a.real()) << "\n";
  out << "C_opt," << fmt(co.c.real()) << "\n";
  out << "E_clone," << fmt(eof_from_concurrence(c_clone)) << "\n";
  out << "C_clone," << fmt(c_clone) << "\n";
  out << "F_local," << fmt(f_local) << "\n";
  out << "C_local," << fmt(c_local) << "\n";
  out << "E_local," << fmt(eof_from_concurrence(c_local)) << "\n";
  out << "F_b_at_Ea_zero," << fmt(find_fb_where_ea_vanishes()) << "\n";
  out << "E_in_critical," << fmt(find_critical_input_entanglement()) << "\n";
}

void run_fig1(int points, std::ostream& out) {
  out << "F_b,F_a,E_a,E_b,E_sum\n";
  for (const TradeoffPoint& pt : sweep_fig1(points)) {
    out << fmt(pt.f_b) << "," << fmt(pt.f_a) << "," << fmt(pt.e_a) << "," << fmt(pt.e_b)
        << "," << fmt(pt.e_a + pt.e_b) << "\n";
  }
}

void run_fig2(int points, std::ostream& out) {
  out << "E_in,E_out\n";
  for (const Fig2Point& pt : sweep_fig2(points)) {
    out << fmt(pt.e_in) << "," << fmt(pt.e_out) << "\n";
  }
}

int run_verify(const VerifyOptions& options, std::ostream& out) {
  if (options.trials < 1) throw std::invalid_argument("verify: trials must be >= 1");
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    out << (ok ? "PASS " : "FAIL ") << name << " (" << detail << ")\n";
    all_ok = all_ok && ok;
  };

  const ClonerCoefficients opt = optimal_symmetric_coeffs();
  std::mt19937_64 rng(options.seed);

  // Covariance of the invariant tensor under random SO(4) rotations.
  {
    ClonerTensor t = tensor_from_coeffs(opt);
    if (options.inject_perturbation) t.at(0, 1, 2, 3) += 0.1;
    const double dev = covariance_check(t, 50, rng);
    report("covariance", dev < 1e-10, "max deviation " + fmt_exp(dev));
  }

  // Choi validity and PPT of both reduced clone maps over random triples.
  {
    std::mt19937_64 trng(options.seed ^ 0xC0FFEEULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int triples = std::min(options.trials, 100);
    double worst_gap = 0.0, worst_eig = 1e300, worst_tp = 0.0;
    for (int i = 0; i < triples; ++i) {
      ClonerCoefficients co{Complex(gauss(trng), gauss(trng)),
                            Complex(gauss(trng), gauss(trng)),
                            Complex(gauss(trng), gauss(trng))};
      // Scale onto the constraint surface.
      const double q =
          4.0 * (std::norm(co.a) + std::norm(co.b) + std::norm(co.c)) +
          2.0 *
              (co.a * std::conj(co.b) + co.a * std::conj(co.c) + co.b * std::conj(co.c))
                  .real();
      const double s = 1.0 / std::sqrt(q);
      co = {co.a * s, co.b * s, co.c * s};
      ChoiOperator choi = choi_from_coeffs(co);
      ComplexMatrix ref = partial_trace(choi.op, {0});
      worst_tp = std::max(
          worst_tp,
          max_abs(ref.data - Eigen::Matrix4cd::Identity() * 0.25));
      for (char clone : {'a', 'b'}) {
        PptReport r = ppt_check(reduced_choi(choi, clone), 1e-9);
        worst_gap = std::max(worst_gap, r.self_transpose_gap);
        worst_eig = std::min(worst_eig, r.min_eigenvalue);
      }
    }
    report("ppt_self_transpose", worst_gap < 1e-10, "max gap " + fmt_exp(worst_gap));
    report("ppt_positive", worst_eig >= -1e-9, "min eigenvalue " + fmt_exp(worst_eig));
    report("trace_preservation", worst_tp < 1e-9, "max deviation " + fmt_exp(worst_tp));
  }

  // Separability preservation on random product inputs.
  {
    std::mt19937_64 srng(options.seed ^ 0xBEEFULL);
    const double worst = separability_scan(opt, options.trials, srng);
    report("separability", worst < 1e-9, "max clone concurrence " + fmt_exp(worst));
  }

  // Closed-form fidelities against the full simulation and the Choi route.
  {
    std::mt19937_64 frng(options.seed ^ 0xFACEULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double worst = 0.0, worst_choi = 0.0;
    for (int i = 0; i < options.trials; ++i) {
      Eigen::Vector3d raw;
      for (int e = 0; e < 3; ++e) raw[e] = gauss(frng);
      const double q = 4.0 * raw.squaredNorm() +
                       2.0 * (raw[0] * raw[1] + raw[0] * raw[2] + raw[1] * raw[2]);
      if (q <= 1e-9) continue;
      const Eigen::Vector3d abc = raw / std::sqrt(q);
      ClonerCoefficients co{abc[0], abc[1], abc[2]};
      const auto [fa_formula, fb_formula] = fidelities_closed_form(co);
      ClonePair pair = clone_pair(random_me_state(frng), co);
      worst = std::max({worst, std::abs(pair.f_a - fa_formula),
                        std::abs(pair.f_b - fb_formula)});
      if (i < 50) {
        const auto [fa_choi, fb_choi] = fidelities_from_choi(choi_from_coeffs(co));
        worst_choi = std::max({worst_choi, std::abs(fa_choi - fa_formula),
                               std::abs(fb_choi - fb_formula)});
      }
    }
    report("fidelity_formula_vs_simulation", worst < 1e-10, "max diff " + fmt_exp(worst));
    report("fidelity_formula_vs_choi", worst_choi < 1e-9, "max diff " + fmt_exp(worst_choi));
  }

  // No-cloning demonstration: Bell measure-and-reprepare on |00> turns a
  // product state into maximally entangled clones.
  {
    TwoQubitPure zero;
    zero.amps << 1.0, 0.0, 0.0, 0.0;
    auto outcomes = bell_measure_reprepare(to_magic(zero));
    double p0 = 0.0, p1 = 0.0, max_outcome_conc = 0.0;
    for (const auto& o : outcomes) {
      if (o.index == 0) p0 = o.probability;
      if (o.index == 1) p1 = o.probability;
      if (o.probability > 1e-12) {
        max_outcome_conc =
            std::max(max_outcome_conc, concurrence_pure(to_magic(o.state)));
      }
    }
    const bool ok = std::abs(p0 - 0.5) < 1e-12 && std::abs(p1 - 0.5) < 1e-12 &&
                    std::abs(max_outcome_conc - 1.0) < 1e-12;
    report("no_cloning_demonstration", ok,
           "outcome probabilities 1/2, clone concurrence " + fmt(max_outcome_conc));
  }

  if (!options.export_choi_path.empty()) {
    save_choi_csv(choi_from_coeffs(opt), options.export_choi_path);
    out << "exported Choi CSV to " << options.export_choi_path << "\n";
  }
  if (!options.import_choi_path.empty()) {
    ChoiOperator loaded = load_choi_csv(options.import_choi_path);
    bool ok = loaded.op.size() == 64;
    double gap = 0.0;
    if (ok) {
      for (char clone : {'a', 'b'}) {
        PptReport r = ppt_check(reduced_choi(loaded, clone), 1e-9);
        gap = std::max(gap, r.self_transpose_gap);
        ok = ok && r.is_ppt;
      }
      ok = ok && gap < 1e-10;
    }
    report("imported_choi_ppt", ok, "max gap " + fmt_exp(gap));
  }

  out << (all_ok ? "VERDICT: PASS\n" : "VERDICT: FAIL\n");
  return all_ok ? 0 : 1;
}

void run_optimize(const std::string& mode, int restarts, std::uint64_t seed,
                  std::ostream& out) {
  const double f_target = (5.0 + std::sqrt(13.0)) / 12.0;
  out << "mode," << mode << "\n";
  if (mode == "symmetric") {
    const ClonerCoefficients co = optimize_symmetric();
    const double f = fidelities_closed_form(co).first;
    out << "A," << fmt(co.a.real()) << "\n";
    out << "C," << fmt(co.c.real()) << "\n";
    out << "objective," << fmt(f) << "\n";
    out << "target," << fmt(f_target) << "\n";
    out << "verdict," << (std::abs(f - f_target) < 1e-6 ? "MATCH" : "MISMATCH") << "\n";
  } else if (mode.rfind("weighted:", 0) == 0) {
    double p = 0.0;
    try {
      p = std::stod(mode.substr(9));
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid weight in mode '" + mode + "'");
    }
    SearchResult res = optimize_weighted(p);
    ClonerCoefficients co{res.parameters[0], res.parameters[1], res.parameters[2]};
    const auto [fa, fb] = fidelities_closed_form(co);
    const double target = weighted_frontier_target(p);
    out << "A," << fmt(res.parameters[0]) << "\n";
    out << "B," << fmt(res.parameters[1]) << "\n";
    out << "C," << fmt(res.parameters[2]) << "\n";
    out << "F_a," << fmt(fa) << "\n";
    out << "F_b," << fmt(fb) << "\n";
    out << "objective," << fmt(res.objective_value) << "\n";
    out << "restarts," << res.restarts_used << "\n";
    out << "converged," << (res.converged ? 1 : 0) << "\n";
    out << "target," << fmt(target) << "\n";
    out << "verdict," << (std::abs(res.objective_value - target) < 1e-5 ? "MATCH" : "MISMATCH")
        << "\n";
  } else if (mode == "isometry:fidelity" || mode == "isometry:concurrence") {
    const bool fid = (mode == "isometry:fidelity");
    const IsometryObjective obj = fid ? IsometryObjective::weighted_fidelity(0.5)
                                      : IsometryObjective::clone_concurrence();
    SearchResult res = optimize_isometry(obj, restarts, seed);
    const double target = fid ? f_target : 2.0 * f_target - 1.0;
    const double lo = fid ? 1e-4 : 1e-3;
    const double hi = fid ? 1e-6 : 1e-4;
    const bool match =
        res.objective_value >= target - lo && res.objective_value <= target + hi;
    out << "objective," << fmt(res.objective_value) << "\n";
    out << "restarts," << res.restarts_used << "\n";
    out << "converged," << (res.converged ? 1 : 0) << "\n";
    out << "target," << fmt(target) << "\n";
    out << "verdict," << (match ? "MATCH" : "MISMATCH") << "\n";
  } else {
    throw std::invalid_argument("unknown optimize mode '" + mode + "'");
  }
}

}  // namespace entclone
