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

#include <cstdint>

#include "entclone/cloner.hpp"

namespace entclone {

/// One point of the asymmetric tradeoff frontier: the largest reachable
/// F_a at the given F_b, the maximizing B, and the clone entanglements
/// through the Werner reduction E_x = E(max(0, 2 F_x - 1)).
struct TradeoffPoint {
  double f_b, f_a, e_a, e_b, b_coeff;
};

struct Fig2Point {
  double e_in, e_out;
};

struct SearchResult {
  double objective_value;
  Eigen::VectorXd parameters;
  int restarts_used;
  bool converged;
};

/// Maximize the symmetric fidelity 7A^2 + C^2 + 4AC over the real (A = B, C)
/// normalization ellipse: angle parametrization plus golden-section
/// refinement. Matches the closed form to 1e-8 in F.
ClonerCoefficients optimize_symmetric();

/// Maximize p F_a + (1-p) F_b over real (A, B, C) on the normalization
/// quadric (2-angle parametrization, multi-start gradient ascent).
/// parameters of the result are (A, B, C).
SearchResult optimize_weighted(double p);

/// Largest F_a over feasible B at fixed F_b, with the maximizing B.
struct TradeoffMax {
  double f_a, b_coeff;
};
TradeoffMax max_tradeoff_fa(double f_b);

/// Frontier sweep over F_b in [1/4, 1]. The grid point nearest the
/// symmetric fidelity is snapped onto it exactly.
std::vector<TradeoffPoint> sweep_fig1(int points);

/// F_b at which the maximized F_a crosses 1/2 (clone a loses all
/// entanglement); bisection to 1e-6.
double find_fb_where_ea_vanishes();

/// Entanglement of the clones versus input entanglement for the symmetric
/// optimal cloner on inputs alpha|00> + sqrt(1-alpha^2)|11>. Rows ordered by
/// increasing E_in from 0 to 1.
std::vector<Fig2Point> sweep_fig2(int points);

/// Input entanglement below which the clones of alpha|00> + beta|11> come
/// out separable.
double find_critical_input_entanglement();

struct IsometryObjective {
  enum class Kind { WeightedFidelity, CloneConcurrence };
  Kind kind;
  double p = 0.5;

  static IsometryObjective weighted_fidelity(double p) {
    return {Kind::WeightedFidelity, p};
  }
  static IsometryObjective clone_concurrence() {
    return {Kind::CloneConcurrence, 0.5};
  }
};

/// Manifold search over cloning isometries, not assuming covariance.
///
/// WeightedFidelity ascends over the full 64x4 isometry (polar retraction
/// after every step); the objective is the exact average of
/// p F_a + (1-p) F_b over all maximally entangled inputs, evaluated through
/// the fourth-moment contraction of the real 3-sphere.
///
/// CloneConcurrence ascends over the double-Bell amplitude family (mixtures
/// of local-unitary channels on each clone, so separability preservation is
/// structural) and maximizes the worst-case min(C_a, C_b) over the
/// maximally entangled manifold via an annealed soft minimum on a seeded
/// input grid. The returned objective is the clamped worst case on a
/// held-out grid, so it never exceeds the universal value.
SearchResult optimize_isometry(const IsometryObjective& objective, int restarts,
                               std::uint64_t seed);

}  // namespace entclone
