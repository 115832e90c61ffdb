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

#include "rsplab/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <stdexcept>

#include "rsplab/enhancement.hpp"
#include "rsplab/measures.hpp"
#include "rsplab/parallel.hpp"
#include "rsplab/qchannel.hpp"

namespace rsplab {

namespace {

constexpr double kProtocolTol = 5e-3;
constexpr double kGmqdTol = 1e-3;
const double kGoldenAngle = M_PI * (3.0 - std::sqrt(5.0));

std::string describe(const char* fmt, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, a, b, c);
  return buf;
}

/// Orthonormal pair spanning the plane orthogonal to n.
std::pair<Vec3, Vec3> tangent_basis(const Vec3& n) {
  const Vec3 helper = std::abs(n[0]) < 0.9 ? Vec3(1.0, 0.0, 0.0) : Vec3(0.0, 1.0, 0.0);
  Vec3 u = cross(n, helper);
  u *= 1.0 / norm(u);
  return {u, cross(n, u)};
}

/// 16 directions in a spherical cap of angular radius h around `center`,
/// laid out on a golden-angle spiral.
std::vector<Vec3> cap_points(const Vec3& center, double h) {
  constexpr int kCap = 16;
  const auto [u, w] = tangent_basis(center);
  std::vector<Vec3> out;
  out.reserve(kCap);
  for (int m = 0; m < kCap; ++m) {
    const double radius = h * std::sqrt((m + 0.5) / kCap);
    const double phi = m * kGoldenAngle;
    Vec3 v = center + radius * (std::cos(phi) * u + std::sin(phi) * w);
    out.push_back((1.0 / norm(v)) * v);
  }
  return out;
}

/// Maximizes f over unit vectors: grid first, then shrinking caps.
template <typename Fn>
std::pair<Vec3, double> maximize_on_sphere(const std::vector<Vec3>& grid, int refine_iters,
                                           Fn&& f) {
  Vec3 best = grid.front();
  double best_val = -std::numeric_limits<double>::infinity();
  for (const Vec3& v : grid) {
    const double val = f(v);
    if (val > best_val) {
      best_val = val;
      best = v;
    }
  }
  double h = std::sqrt(4.0 * M_PI / static_cast<double>(grid.size()));
  for (int it = 0; it < refine_iters; ++it) {
    const Vec3 center = best;
    for (const Vec3& v : cap_points(center, h)) {
      const double val = f(v);
      if (val > best_val) {
        best_val = val;
        best = v;
      }
    }
    h *= 0.2;
  }
  return {best, best_val};
}

/// Squared HS norm of a 4x4 matrix.
double hs_norm_sq(const Matrix4c& m) {
  double s = 0.0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) s += std::norm(m(r, c));
  return s;
}

Matrix2c projector(const Vec3& e) { return density_from_bloch(e); }

/// Classical-quantum candidate: w |e⟩⟨e|⊗ρ1 + (1-w) |e⊥⟩⟨e⊥|⊗ρ2 with the
/// quantum parts given by their unnormalized Bloch vectors v1 = w r1,
/// v2 = (1-w) r2.
struct CqCandidate {
  double theta = 0.0, phi = 0.0, w = 0.5;
  Vec3 v1, v2;

  Vec3 axis() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
  }

  bool feasible() const {
    return w >= 0.0 && w <= 1.0 && norm(v1) <= w && norm(v2) <= 1.0 - w;
  }

  /// Builds χ after verifying each part is a density matrix.
  std::optional<Matrix4c> build() const {
    if (!feasible()) return std::nullopt;
    const Vec3 e = axis();
    const Matrix2c part1 = w > 0.0 ? density_from_bloch((1.0 / w) * v1) : projector(e);
    const Matrix2c part2 = w < 1.0 ? density_from_bloch((1.0 / (1.0 - w)) * v2) : projector(e);
    if (!psd_check(part1, 1e-12) || !psd_check(part2, 1e-12)) return std::nullopt;
    Matrix4c chi = Complex(w) * kron(projector(e), part1);
    chi += Complex(1.0 - w) * kron(projector(-e), part2);
    return chi;
  }

  double& coord(std::size_t k) {
    switch (k) {
      case 0: return theta;
      case 1: return phi;
      case 2: return w;
      case 3: case 4: case 5: return v1[k - 3];
      default: return v2[k - 6];
    }
  }
};

double cq_distance(const Matrix4c& rho, const CqCandidate& cand) {
  const auto chi = cand.build();
  if (!chi) return std::numeric_limits<double>::infinity();
  return 2.0 * hs_norm_sq(rho - *chi);
}

CqCandidate random_candidate(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  CqCandidate c;
  const Vec3 e = random_unit_vector(rng);
  c.theta = std::acos(std::clamp(e[2], -1.0, 1.0));
  c.phi = std::atan2(e[1], e[0]);
  c.w = unit(rng);
  c.v1 = (c.w * std::cbrt(unit(rng))) * random_unit_vector(rng);
  c.v2 = ((1.0 - c.w) * std::cbrt(unit(rng))) * random_unit_vector(rng);
  return c;
}

/// Compass search over the nine candidate coordinates.
std::pair<CqCandidate, double> local_refine(const Matrix4c& rho, CqCandidate cand) {
  constexpr int kMaxEvals = 200000;
  double best = cq_distance(rho, cand);
  double step = 0.25;
  int evals = 0;
  while (step > 1e-10 && evals < kMaxEvals) {
    bool improved = false;
    for (std::size_t k = 0; k < 9; ++k) {
      for (double dir : {1.0, -1.0}) {
        CqCandidate trial = cand;
        trial.coord(k) += dir * step;
        const double val = cq_distance(rho, trial);
        ++evals;
        // Ignore roundoff-level gains, which otherwise stall the search near
        // the poles of the axis parameterization.
        if (val < best - 1e-15) {
          best = val;
          cand = trial;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return {cand, best};
}

OracleReport make_report(std::string name, double estimate, double reference, int trials,
                         std::uint64_t seed, const OracleConfig& cfg) {
  OracleReport r;
  r.name = std::move(name);
  r.estimate = estimate;
  r.reference = reference;
  r.abs_err = std::abs(estimate - reference);
  r.trials = trials;
  r.seed = seed;
  r.config = cfg;
  return r;
}

}  // namespace

void OracleConfig::validate() const {
  if (n_beta < 4 || n_target < 4 || n_alpha < 4)
    throw std::invalid_argument("OracleConfig: grid sizes must be >= 4");
  if (refine_iters < 0) throw std::invalid_argument("OracleConfig: refine_iters must be >= 0");
}

std::vector<Vec3> fibonacci_sphere(int n) {
  if (n < 1) throw std::invalid_argument("fibonacci_sphere: n must be >= 1");
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = i * kGoldenAngle;
    out.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return out;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

OracleReport protocol_fidelity_oracle(const TwoQubitState& s, const OracleConfig& cfg) {
  cfg.validate();
  const PauliDecomposition& d = s.decomposition();
  const Mat3 Et = d.E.transpose();
  const std::vector<Vec3> alpha_grid = fibonacci_sphere(cfg.n_alpha);
  const std::vector<Vec3> beta_grid = fibonacci_sphere(cfg.n_beta);

  // Target-averaged optimal payoff for correction axis beta.
  auto averaged_payoff = [&](const Vec3& beta) {
    const Mat3 flip = rotation_axis_angle(beta, M_PI);
    const auto [u, w] = tangent_basis(beta);
    double total = 0.0;
    for (int k = 0; k < cfg.n_target; ++k) {
      const double theta = 2.0 * M_PI * k / cfg.n_target;
      const Vec3 target = std::cos(theta) * u + std::sin(theta) * w;
      auto payoff = [&](const Vec3& alpha) {
        // Bob's conditional states after Alice's outcome eps = +1 / -1.
        std::array<Vec3, 2> weighted{};  // p_eps * r_eps
        for (int i = 0; i < 2; ++i) {
          const double eps = i == 0 ? 1.0 : -1.0;
          const double prob = 0.5 * (1.0 + eps * dot(d.a, alpha));
          if (prob <= 0.0) continue;
          const Vec3 r = (1.0 / (2.0 * prob)) * (d.b + eps * (Et * alpha));
          weighted[i] = prob * r;
        }
        double best = 0.0;
        for (int flagged = 0; flagged < 2; ++flagged) {
          const Vec3 r = flagged == 0 ? weighted[0] + flip * weighted[1]
                                      : flip * weighted[0] + weighted[1];
          const double overlap = dot(r, target);
          best = std::max(best, overlap * overlap);
        }
        return best;
      };
      total += maximize_on_sphere(alpha_grid, cfg.refine_iters, payoff).second;
    }
    return total / cfg.n_target;
  };

  auto negated = [&](const Vec3& beta) { return -averaged_payoff(beta); };
  const double estimate = -maximize_on_sphere(beta_grid, cfg.refine_iters, negated).second;

  OracleReport r = make_report("protocol", estimate, rsp_fidelity(s), 1, cfg.seed, cfg);
  r.passed = r.abs_err <= kProtocolTol;
  r.worst_case = describe("|oracle - closed form| = %.3g", r.abs_err);
  return r;
}

OracleReport gmqd_search_oracle(const TwoQubitState& s, const OracleConfig& cfg) {
  cfg.validate();
  constexpr int kRestarts = 8;
  std::mt19937_64 rng = trial_rng(cfg.seed, 0);
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kRestarts; ++i) {
    const auto [cand, val] = local_refine(s.rho(), random_candidate(rng));
    best = std::min(best, val);
  }
  OracleReport r = make_report("gmqd", best, gmqd(s), kRestarts, cfg.seed, cfg);
  r.passed = r.estimate >= r.reference - 1e-9 && r.estimate - r.reference <= kGmqdTol;
  r.worst_case = describe("search - closed form = %.3g", r.estimate - r.reference);
  return r;
}

OracleReport unital_monotonicity_suite(int n_trials, std::uint64_t seed) {
  if (n_trials < 1) throw std::invalid_argument("unital_monotonicity_suite: n_trials must be >= 1");
  std::vector<double> increase(static_cast<std::size_t>(n_trials));
  std::vector<double> before(increase.size());
  parallel_for(increase.size(), [&](std::size_t t) {
    std::mt19937_64 rng = trial_rng(seed, t);
    const TwoQubitState rho = random_density(rng);
    const auto [ch_a, ch_b] = sample_unital_local(rng);
    before[t] = rsp_fidelity(rho);
    increase[t] = rsp_fidelity(apply_local(ch_a, ch_b, rho)) - before[t];
  });
  const auto worst = std::max_element(increase.begin(), increase.end());
  const auto idx = static_cast<std::size_t>(worst - increase.begin());
  OracleReport r = make_report("monotonicity", *worst, 0.0, n_trials, seed, {});
  r.config.seed = seed;
  r.passed = *worst <= 1e-9;
  r.worst_case = describe("trial %.0f: F %.12g -> %.12g", static_cast<double>(idx), before[idx],
                          before[idx] + *worst);
  return r;
}

OracleReport nonunital_increase_witness() {
  const BellDiagonalParams c{-1.0, 0.0, 0.0};
  const TwoQubitState rho = bell_diagonal(c);
  const double popt = p_opt(c);
  auto damped = [&](double p) {
    const QubitChannel ad = amplitude_damping(p);
    return apply_local(ad, ad, rho);
  };
  const TwoQubitState out = damped(popt);
  const double f_before = rsp_fidelity(rho);
  const double f_after = rsp_fidelity(out);
  const double q = 2.0 / (3.0 + std::sqrt(5.0));
  const double reference = 0.5 * q * q;

  const bool discord_up = gmqd(out) > gmqd(rho);
  const bool unchanged_at_zero = std::abs(rsp_fidelity(damped(0.0)) - f_before) <= 1e-12;
  const double f_lo = rsp_fidelity(damped(popt - 0.05));
  const double f_hi = rsp_fidelity(damped(popt + 0.05));
  const bool local_max = f_lo < f_after && f_hi < f_after;

  OracleReport r = make_report("witness", f_after, reference, 1, 0, {});
  r.passed = std::abs(f_before) <= 1e-12 && r.abs_err <= 1e-9 && discord_up &&
             unchanged_at_zero && local_max;
  r.worst_case = describe("F 0 -> %.12g at p_opt; F(p_opt-0.05) = %.6g, F(p_opt+0.05) = %.6g",
                          f_after, f_lo, f_hi);
  return r;
}

OracleReport discord_raising_check() {
  Matrix4c rho;
  rho(0, 0) = 0.5;
  rho(3, 3) = 0.5;
  const TwoQubitState in = TwoQubitState::from_density(rho);
  const TwoQubitState out = apply_local(discord_raising(), identity_channel(), in);

  // Expected (|00⟩⟨00| + |+1⟩⟨+1|) / 2.
  Matrix2c ket0;
  ket0(0, 0) = 1.0;
  Matrix2c ket1;
  ket1(1, 1) = 1.0;
  const Matrix4c expected =
      0.5 * (kron(ket0, ket0) + kron(density_from_bloch({1.0, 0.0, 0.0}), ket1));

  const double dg_in = gmqd(in), dg_out = gmqd(out), f_out = rsp_fidelity(out);
  OracleReport r = make_report("discord_raising", dg_out, 0.25, 1, 0, {});
  r.passed = std::abs(dg_in) <= 1e-10 && r.abs_err <= 1e-10 && std::abs(f_out) <= 1e-10 &&
             max_abs_diff(out.rho(), expected) <= 1e-12;
  r.worst_case = describe("D_G %.12g -> %.12g, F_RSP after = %.3g", dg_in, dg_out, f_out);
  return r;
}

OracleReport protocol_suite(int n_random, std::uint64_t seed, const OracleConfig& cfg) {
  if (n_random < 0) throw std::invalid_argument("protocol_suite: n_random must be >= 0");
  std::vector<TwoQubitState> states = {singlet(), maximally_mixed(),
                                       bell_diagonal({0.5, 0.0, -0.5})};
  {
    Matrix4c rho;  // (|00⟩⟨00| + |+1⟩⟨+1|) / 2
    rho(0, 0) = 0.5;
    rho(1, 1) = 0.25;
    rho(3, 3) = 0.25;
    rho(1, 3) = 0.25;
    rho(3, 1) = 0.25;
    states.push_back(TwoQubitState::from_density(rho));
  }
  std::mt19937_64 rng = trial_rng(seed, 0);
  while (static_cast<int>(states.size()) < 4 + n_random) {
    TwoQubitState s = random_density(rng);
    if (s.purity() <= 0.99) states.push_back(std::move(s));
  }

  std::vector<OracleReport> reports(states.size());
  parallel_for(states.size(), [&](std::size_t i) {
    OracleConfig c = cfg;
    c.seed = seed;
    reports[i] = protocol_fidelity_oracle(states[i], c);
  });
  const auto worst = std::max_element(
      reports.begin(), reports.end(),
      [](const OracleReport& a, const OracleReport& b) { return a.abs_err < b.abs_err; });
  OracleReport r = make_report("protocol", worst->estimate, worst->reference,
                               static_cast<int>(states.size()), seed, cfg);
  r.config.seed = seed;
  r.passed = std::all_of(reports.begin(), reports.end(),
                         [](const OracleReport& x) { return x.passed; });
  r.worst_case = describe("state %.0f: oracle %.9g vs closed form %.9g",
                          static_cast<double>(worst - reports.begin()), worst->estimate,
                          worst->reference);
  return r;
}

OracleReport gmqd_suite(int n_states, std::uint64_t seed, const OracleConfig& cfg) {
  if (n_states < 1) throw std::invalid_argument("gmqd_suite: n_states must be >= 1");
  std::vector<TwoQubitState> states;
  std::mt19937_64 rng = trial_rng(seed, 0);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  while (static_cast<int>(states.size()) < n_states) {
    BellDiagonalParams c;
    c.c1 = uniform(rng);
    c.c2 = uniform(rng);
    c.c3 = uniform(rng);
    if (c.in_tetrahedron(0.0)) states.push_back(bell_diagonal(c));
  }
  std::vector<OracleReport> reports(states.size());
  parallel_for(states.size(), [&](std::size_t i) {
    OracleConfig c = cfg;
    c.seed = seed + i;
    reports[i] = gmqd_search_oracle(states[i], c);
  });
  const auto worst = std::max_element(
      reports.begin(), reports.end(),
      [](const OracleReport& a, const OracleReport& b) { return a.abs_err < b.abs_err; });
  OracleReport r = make_report("gmqd", worst->estimate, worst->reference, n_states, seed, cfg);
  r.config.seed = seed;
  r.passed = std::all_of(reports.begin(), reports.end(),
                         [](const OracleReport& x) { return x.passed; });
  r.worst_case = describe("state %.0f: search %.9g vs closed form %.9g",
                          static_cast<double>(worst - reports.begin()), worst->estimate,
                          worst->reference);
  return r;
}

}  // namespace rsplab
