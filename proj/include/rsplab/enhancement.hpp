// Copyright 2026 The rsplab Authors
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

#include <optional>
#include <string>
#include <vector>

#include "rsplab/qstate.hpp"

namespace rsplab {

/// Damping probability p with q = 1 - p, optionally tied to scaled time via
/// p = 1 - exp(-Γt).
struct DampingPoint {
  double p = 0.0;
  double q = 1.0;
  std::optional<double> gamma_t;

  static DampingPoint from_p(double p);
  static DampingPoint from_gamma_t(double gamma_t);
};

/// max(|c1|, |c2|).
double max_transverse(const BellDiagonalParams& c);

/// State after AD(p)⊗AD(p) on a Bell-diagonal state:
/// a = b = (0, 0, p), E = diag(q c1, q c2, c3 q² + p²).
TwoQubitState evolve_closed_form(const BellDiagonalParams& c, double p);

/// Closed-form RSP fidelity and discord of evolve_closed_form(c, p).
double f_under_damping(const BellDiagonalParams& c, double p);
double dg_under_damping(const BellDiagonalParams& c, double p);

/// Smaller root of q c = c3 q² + (1 - q)², i.e. 2 / (2 + c + √(c² + 4(c - c3))).
/// Requires |c3| <= c_max and 0 < c_max <= 1.
double q1(double c_max, double c3);

/// Two-branch form of f_under_damping in terms of q, valid when |c3| <= c:
///   q >= q1: [q²(c1² + c2² - c²) + (c3 q² + p²)²] / 2
///   q <  q1: q²(c1² + c2²) / 2
/// Throws std::invalid_argument when |c3| > c.
double f_piecewise(const BellDiagonalParams& c, double q);

/// d/dq of the upper branch of f_piecewise, for q in [q1, 1].
double f_derivative(const BellDiagonalParams& c, double q);

/// LHS - RHS of the enhancibility inequality
///   (c1² + c2²) / (c1² + c2² + c3² - c²) > (2 + c + √(c² + 4(c - c3)))² / 4.
/// +inf when the denominator vanishes with a positive numerator; nullopt when
/// the criterion does not apply (|c3| > c, or the maximally mixed state).
std::optional<double> enhancement_margin(const BellDiagonalParams& c);

bool is_enhancible(const BellDiagonalParams& c);

/// Optimal symmetric damping 1 - q1. Throws std::invalid_argument when c is
/// not enhancible.
double p_opt(const BellDiagonalParams& c);

struct EnhanceReport {
  double c = 0.0;
  bool enhancible = false;
  /// Crossing point of the optimal channel; 1 when not enhancible.
  double q1 = 1.0;
  /// 1 - q1; 0 (no damping) when not enhancible.
  double p_opt = 0.0;
  double f_before = 0.0;
  double f_after = 0.0;
};

EnhanceReport enhance(const BellDiagonalParams& c);

/// Brute-force maximization of f_under_damping over p in [0, 1]: a uniform
/// grid of n_points followed by golden-section refinement around the best
/// grid point.
struct DampingSweep {
  double grid_best_p = 0.0;
  double grid_best_f = 0.0;
  double refined_p = 0.0;
  double refined_f = 0.0;
};
DampingSweep sweep_damping(const BellDiagonalParams& c, std::size_t n_points = 10000);

enum class TraceMeasure { kFidelity, kDiscord };
std::string to_string(TraceMeasure m);

struct TracePoint {
  double gamma_t = 0.0;
  double p = 0.0;
  double f_rsp = 0.0;
  double d_g = 0.0;
};

struct SuddenChange {
  double gamma_t = 0.0;
  TraceMeasure measure = TraceMeasure::kFidelity;
};

struct EvolutionTrace {
  std::vector<TracePoint> points;
  /// Where the maximizing term inside the fidelity or discord formula changes.
  std::vector<SuddenChange> sudden_changes;
  /// Isolated instants where f_rsp reaches zero while d_g > 0.
  std::vector<double> zero_touches;
};

/// Uniform Γt grid on [0, gamma_t_max] with `steps` points; events refined
/// by bisection. Requires steps >= 2 and gamma_t_max > 0.
EvolutionTrace trace_evolution(const BellDiagonalParams& c, double gamma_t_max,
                               std::size_t steps = 2001);

struct ScanPoint {
  BellDiagonalParams c;
  bool enhancible = false;
};

struct SymmetryCheck {
  std::string name;
  bool holds = false;
  std::size_t mismatches = 0;
};

struct TetrahedronScan {
  std::size_t resolution = 0;
  std::vector<ScanPoint> points;
  std::size_t enhancible_count = 0;
  double enhancible_fraction = 0.0;
  std::vector<SymmetryCheck> symmetries;
};

/// Lattice (2i - (n-1)) / (n-1) per axis, restricted to the tetrahedron.
/// Candidate mirror symmetries of the enhancible region are checked
/// point by point on the lattice.
TetrahedronScan scan_tetrahedron(std::size_t resolution = 81);

struct ProfilePoint {
  double c1 = 0.0;
  double f_before = 0.0;
  double f_after = 0.0;
};

/// States (c1, -1, c1) for c1 in [-1, 1], before and after the optimal
/// symmetric damping.
std::vector<ProfilePoint> profile_line(std::size_t n);

}  // namespace rsplab
