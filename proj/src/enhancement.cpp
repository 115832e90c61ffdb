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

#include "rsplab/enhancement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>

#include "rsplab/parallel.hpp"

namespace rsplab {

namespace {

/// Signed candidate terms whose squares enter the max in the fidelity formula.
std::array<double, 3> damped_correlations(const BellDiagonalParams& c, double p, double q) {
  return {q * c.c1, q * c.c2, c.c3 * q * q + p * p};
}

std::array<double, 3> fidelity_terms(const BellDiagonalParams& c, double p, double q) {
  const auto x = damped_correlations(c, p, q);
  return {x[0] * x[0], x[1] * x[1], x[2] * x[2]};
}

std::array<double, 3> discord_terms(const BellDiagonalParams& c, double p, double q) {
  auto t = fidelity_terms(c, p, q);
  t[2] += p * p;
  return t;
}

double half_sum_minus_max(const std::array<double, 3>& t) {
  return 0.5 * (t[0] + t[1] + t[2] - std::max({t[0], t[1], t[2]}));
}

std::size_t argmax_lowest(const std::array<double, 3>& t) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (t[i] > t[best]) best = i;
  return best;
}

double crossing(double c_max, double c3) {
  return 2.0 / (2.0 + c_max + std::sqrt(c_max * c_max + 4.0 * (c_max - c3)));
}

void require_case_precondition(const BellDiagonalParams& c, const char* where) {
  if (std::abs(c.c3) > max_transverse(c))
    throw std::invalid_argument(std::string(where) +
                                ": requires |c3| <= max(|c1|, |c2|); use f_under_damping");
}

template <typename Fn>
double bisect_root(Fn&& h, double lo, double hi) {
  double h_lo = h(lo);
  for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double h_mid = h(mid);
    if (h_mid == 0.0) return mid;
    if ((h_mid < 0.0) == (h_lo < 0.0)) {
      lo = mid;
      h_lo = h_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double lattice_coordinate(std::size_t i, std::size_t n) {
  return (2.0 * static_cast<double>(i) - static_cast<double>(n - 1)) / static_cast<double>(n - 1);
}

}  // namespace

DampingPoint DampingPoint::from_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("DampingPoint: p must lie in [0, 1]");
  return {p, 1.0 - p, std::nullopt};
}

DampingPoint DampingPoint::from_gamma_t(double gamma_t) {
  if (!(gamma_t >= 0.0)) throw std::invalid_argument("DampingPoint: gamma_t must be >= 0");
  const double p = -std::expm1(-gamma_t);
  return {p, 1.0 - p, gamma_t};
}

double max_transverse(const BellDiagonalParams& c) {
  return std::max(std::abs(c.c1), std::abs(c.c2));
}

TwoQubitState evolve_closed_form(const BellDiagonalParams& c, double p) {
  const DampingPoint dp = DampingPoint::from_p(p);
  bell_diagonal(c);  // validates c
  PauliDecomposition d;
  d.a = {0.0, 0.0, dp.p};
  d.b = {0.0, 0.0, dp.p};
  const auto x = damped_correlations(c, dp.p, dp.q);
  d.E = Mat3::diag(x[0], x[1], x[2]);
  return compose(d);
}

double f_under_damping(const BellDiagonalParams& c, double p) {
  return half_sum_minus_max(fidelity_terms(c, p, 1.0 - p));
}

double dg_under_damping(const BellDiagonalParams& c, double p) {
  return half_sum_minus_max(discord_terms(c, p, 1.0 - p));
}

double q1(double c_max, double c3) {
  if (!(c_max > 0.0 && c_max <= 1.0))
    throw std::invalid_argument("q1: c must lie in (0, 1]; c = 0 has no crossing");
  if (std::abs(c3) > c_max) throw std::invalid_argument("q1: requires |c3| <= c");
  return crossing(c_max, c3);
}

double f_piecewise(const BellDiagonalParams& c, double q) {
  require_case_precondition(c, "f_piecewise");
  const double cm = max_transverse(c);
  const double p = 1.0 - q;
  const double transverse = c.c1 * c.c1 + c.c2 * c.c2;
  if (q >= crossing(cm, c.c3)) {
    const double z = c.c3 * q * q + p * p;
    return 0.5 * (q * q * (transverse - cm * cm) + z * z);
  }
  return 0.5 * q * q * transverse;
}

double f_derivative(const BellDiagonalParams& c, double q) {
  require_case_precondition(c, "f_derivative");
  const double cm = max_transverse(c);
  if (q > 1.0 || q < crossing(cm, c.c3))
    throw std::invalid_argument("f_derivative: q must lie in [q1, 1]");
  const double g = (1.0 - q) * (1.0 - q) + c.c3 * q * q;
  return (c.c1 * c.c1 + c.c2 * c.c2 - cm * cm) * q + g * (2.0 * (c.c3 + 1.0) * q - 2.0);
}

std::optional<double> enhancement_margin(const BellDiagonalParams& c) {
  const double cm = max_transverse(c);
  if (cm < std::abs(c.c3)) return std::nullopt;
  const double numerator = c.c1 * c.c1 + c.c2 * c.c2;
  if (numerator == 0.0) return std::nullopt;  // only the maximally mixed state remains
  const double denominator = numerator + c.c3 * c.c3 - cm * cm;
  const double root = 2.0 + cm + std::sqrt(cm * cm + 4.0 * (cm - c.c3));
  const double rhs = root * root / 4.0;
  if (denominator <= 0.0) return std::numeric_limits<double>::infinity();
  return numerator / denominator - rhs;
}

bool is_enhancible(const BellDiagonalParams& c) {
  const auto margin = enhancement_margin(c);
  return margin.has_value() && *margin > 0.0;
}

double p_opt(const BellDiagonalParams& c) {
  if (!is_enhancible(c)) throw std::invalid_argument("p_opt: state is not enhancible");
  const double cm = max_transverse(c);
  const double root = std::sqrt(cm * cm + 4.0 * (cm - c.c3));
  return (cm + root) / (2.0 + cm + root);
}

EnhanceReport enhance(const BellDiagonalParams& c) {
  bell_diagonal(c);  // validates c
  EnhanceReport r;
  r.c = max_transverse(c);
  r.enhancible = is_enhancible(c);
  r.f_before = f_under_damping(c, 0.0);
  r.f_after = r.f_before;
  if (r.enhancible) {
    r.p_opt = p_opt(c);
    r.q1 = 1.0 - r.p_opt;
    r.f_after = f_under_damping(c, r.p_opt);
  }
  return r;
}

DampingSweep sweep_damping(const BellDiagonalParams& c, std::size_t n_points) {
  if (n_points < 2) throw std::invalid_argument("sweep_damping: need at least 2 points");
  DampingSweep s;
  s.grid_best_f = -1.0;
  std::size_t best = 0;
  const double step = 1.0 / static_cast<double>(n_points - 1);
  for (std::size_t i = 0; i < n_points; ++i) {
    const double p = static_cast<double>(i) * step;
    const double f = f_under_damping(c, p);
    if (f > s.grid_best_f) {
      s.grid_best_f = f;
      s.grid_best_p = p;
      best = i;
    }
  }
  // Golden-section refinement inside the neighbouring grid cells.
  double lo = best == 0 ? 0.0 : static_cast<double>(best - 1) * step;
  double hi = best + 1 >= n_points ? 1.0 : static_cast<double>(best + 1) * step;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = f_under_damping(c, x1), f2 = f_under_damping(c, x2);
  for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f_under_damping(c, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f_under_damping(c, x1);
    }
  }
  const double p_mid = 0.5 * (lo + hi);
  s.refined_p = p_mid;
  s.refined_f = f_under_damping(c, p_mid);
  if (s.grid_best_f > s.refined_f) {
    s.refined_p = s.grid_best_p;
    s.refined_f = s.grid_best_f;
  }
  return s;
}

std::string to_string(TraceMeasure m) { return m == TraceMeasure::kFidelity ? "f" : "dg"; }

EvolutionTrace trace_evolution(const BellDiagonalParams& c, double gamma_t_max,
                               std::size_t steps) {
  if (steps < 2) throw std::invalid_argument("trace_evolution: steps must be >= 2");
  if (!(gamma_t_max > 0.0)) throw std::invalid_argument("trace_evolution: gamma_t_max must be > 0");
  bell_diagonal(c);  // validates c

  auto at = [&](double gt) {
    const DampingPoint dp = DampingPoint::from_gamma_t(gt);
    return std::pair{dp.p, dp.q};
  };

  EvolutionTrace trace;
  trace.points.resize(steps);
  std::vector<double> grid(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    grid[i] = gamma_t_max * static_cast<double>(i) / static_cast<double>(steps - 1);
    const auto [p, q] = at(grid[i]);
    trace.points[i] = {grid[i], p, half_sum_minus_max(fidelity_terms(c, p, q)),
                       half_sum_minus_max(discord_terms(c, p, q))};
  }

  // Branch switches of the maximizing term.
  using TermFn = std::array<double, 3> (*)(const BellDiagonalParams&, double, double);
  const std::array<std::pair<TraceMeasure, TermFn>, 2> measures = {
      std::pair{TraceMeasure::kFidelity, &fidelity_terms},
      std::pair{TraceMeasure::kDiscord, &discord_terms}};
  for (const auto& [measure, terms] : measures) {
    auto branch = [&](double gt) {
      const auto [p, q] = at(gt);
      return argmax_lowest(terms(c, p, q));
    };
    std::size_t prev = branch(grid[0]);
    for (std::size_t i = 1; i < steps; ++i) {
      const std::size_t cur = branch(grid[i]);
      if (cur == prev) continue;
      auto gap = [&](double gt) {
        const auto [p, q] = at(gt);
        const auto t = terms(c, p, q);
        return t[prev] - t[cur];
      };
      trace.sudden_changes.push_back({bisect_root(gap, grid[i - 1], grid[i]), measure});
      prev = cur;
    }
  }
  std::sort(trace.sudden_changes.begin(), trace.sudden_changes.end(),
            [](const SuddenChange& a, const SuddenChange& b) { return a.gamma_t < b.gamma_t; });

  // Zeros of the signed correlation terms; the fidelity can only vanish
  // where two of them vanish together.
  for (std::size_t k = 0; k < 3; ++k) {
    auto term = [&](double gt) {
      const auto [p, q] = at(gt);
      return damped_correlations(c, p, q)[k];
    };
    for (std::size_t i = 0; i + 1 < steps; ++i) {
      const double lo = term(grid[i]), hi = term(grid[i + 1]);
      std::optional<double> root;
      if ((lo < 0.0 && hi > 0.0) || (lo > 0.0 && hi < 0.0)) {
        root = bisect_root(term, grid[i], grid[i + 1]);
      } else if (lo == 0.0 && i > 0 && term(grid[i - 1]) != 0.0 && hi != 0.0) {
        root = grid[i];
      }
      if (!root) continue;
      const auto [p, q] = at(*root);
      const double f = half_sum_minus_max(fidelity_terms(c, p, q));
      const double dg = half_sum_minus_max(discord_terms(c, p, q));
      if (f <= 1e-10 && dg >= 1e-6) trace.zero_touches.push_back(*root);
    }
  }
  std::sort(trace.zero_touches.begin(), trace.zero_touches.end());
  trace.zero_touches.erase(
      std::unique(trace.zero_touches.begin(), trace.zero_touches.end(),
                  [](double a, double b) { return std::abs(a - b) <= 1e-9; }),
      trace.zero_touches.end());
  return trace;
}

TetrahedronScan scan_tetrahedron(std::size_t resolution) {
  if (resolution < 2) throw std::invalid_argument("scan_tetrahedron: resolution must be >= 2");
  const std::size_t n = resolution;
  const std::size_t total = n * n * n;
  // -1: outside the tetrahedron, 0/1: enhancible flag.
  std::vector<std::int8_t> tag(total);
  parallel_for(total, [&](std::size_t idx) {
    const BellDiagonalParams c{lattice_coordinate(idx / (n * n), n),
                               lattice_coordinate((idx / n) % n, n),
                               lattice_coordinate(idx % n, n)};
    tag[idx] = c.in_tetrahedron() ? static_cast<std::int8_t>(is_enhancible(c)) : std::int8_t{-1};
  });

  TetrahedronScan scan;
  scan.resolution = n;
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (tag[idx] < 0) continue;
    scan.points.push_back({{lattice_coordinate(idx / (n * n), n),
                            lattice_coordinate((idx / n) % n, n), lattice_coordinate(idx % n, n)},
                           tag[idx] == 1});
    scan.enhancible_count += tag[idx] == 1;
  }
  scan.enhancible_fraction =
      scan.points.empty() ? 0.0
                          : static_cast<double>(scan.enhancible_count) /
                                static_cast<double>(scan.points.size());

  using Map = std::function<std::array<std::size_t, 3>(std::size_t, std::size_t, std::size_t)>;
  const std::size_t m = n - 1;
  const std::vector<std::pair<std::string, Map>> candidates = {
      {"(-c1,-c2,c3)", [m](auto i, auto j, auto k) { return std::array{m - i, m - j, k}; }},
      {"(-c1,c2,-c3)", [m](auto i, auto j, auto k) { return std::array{m - i, j, m - k}; }},
      {"(c1,-c2,-c3)", [m](auto i, auto j, auto k) { return std::array{i, m - j, m - k}; }},
      {"(c2,c1,c3)", [](auto i, auto j, auto k) { return std::array{j, i, k}; }},
      {"(-c2,-c1,c3)", [m](auto i, auto j, auto k) { return std::array{m - j, m - i, k}; }},
  };
  for (const auto& [name, map] : candidates) {
    SymmetryCheck check{name, true, 0};
    for (std::size_t idx = 0; idx < total; ++idx) {
      if (tag[idx] < 0) continue;
      const auto img = map(idx / (n * n), (idx / n) % n, idx % n);
      if (tag[(img[0] * n + img[1]) * n + img[2]] != tag[idx]) ++check.mismatches;
    }
    check.holds = check.mismatches == 0;
    scan.symmetries.push_back(check);
  }
  return scan;
}

std::vector<ProfilePoint> profile_line(std::size_t n) {
  if (n < 2) throw std::invalid_argument("profile_line: need at least 2 points");
  std::vector<ProfilePoint> out(n);
  parallel_for(n, [&](std::size_t i) {
    const double c1 = lattice_coordinate(i, n);
    const BellDiagonalParams c{c1, -1.0, c1};
    const EnhanceReport r = enhance(c);
    out[i] = {c1, r.f_before, r.f_after};
  });
  return out;
}

}  // namespace rsplab
