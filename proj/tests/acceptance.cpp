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

// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "rsplab/enhancement.hpp"
#include "rsplab/measures.hpp"
#include "rsplab/oracles.hpp"
#include "rsplab/qchannel.hpp"
#include "test_support.hpp"

namespace {

using namespace rsplab;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a = 0, double b = 0, double c = 0, double d = 0) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome extremal_values() {
  const TwoQubitState s = singlet(), mixed = maximally_mixed();
  const auto t0 = Clock::now();
  const double fs = rsp_fidelity(s), fm = rsp_fidelity(mixed);
  const double ds = gmqd(s), dm = gmqd(mixed);
  const double ms = 1e3 * seconds_since(t0);
  const bool ok = std::abs(fs - 1.0) <= 1e-12 && std::abs(fm) <= 1e-12 &&
                  std::abs(ds - 1.0) <= 1e-12 && std::abs(dm) <= 1e-12 && ms < 1.0;
  return {ok, fmt("F(singlet)=%.15g F(I/4)=%.3g D_G=%.15g/%.3g", fs, fm, ds, dm) +
                  fmt(" time=%.4f ms", ms)};
}

Outcome figure_initial_point() {
  const TwoQubitState s = bell_diagonal({0.5, 0.0, -0.5});
  const double f = rsp_fidelity(s), d = gmqd(s);
  return {std::abs(f - 0.125) <= 1e-12 && std::abs(d - 0.125) <= 1e-12,
          fmt("f_rsp=%.15g d_g=%.15g", f, d)};
}

EvolutionTrace figure_trace() { return trace_evolution({0.5, 0.0, -0.5}, 3.0, 2001); }

Outcome zero_touch() {
  const BellDiagonalParams c{0.5, 0.0, -0.5};
  const EvolutionTrace t = figure_trace();
  const double expected = -std::log(2.0 - std::sqrt(2.0));
  if (t.zero_touches.empty()) return {false, "no zero_touch recorded"};
  double best = t.zero_touches.front();
  for (double z : t.zero_touches)
    if (std::abs(z - expected) < std::abs(best - expected)) best = z;
  const double dg = dg_under_damping(c, -std::expm1(-best));
  // f on both sides: the neighbouring trace samples.
  double left = -1.0, right = -1.0;
  for (const TracePoint& pt : t.points) {
    if (pt.gamma_t < best) left = pt.f_rsp;
    if (pt.gamma_t > best && right < 0.0) right = pt.f_rsp;
  }
  const bool ok = std::abs(best - expected) <= 1e-6 && std::abs(dg - 0.0429) <= 1e-4 &&
                  left > 0.0 && right > 0.0;
  return {ok, fmt("zero_touch at %.9f (expected -ln(2-sqrt2)=%.9f) d_g=%.6f f_left=%.3g",
                  best, expected, dg, left) +
                  fmt(" f_right=%.3g", right)};
}

Outcome sudden_change() {
  const EvolutionTrace t = figure_trace();
  const double expected = -std::log((5.0 - std::sqrt(17.0)) / 2.0);
  double best = NAN;
  for (const SuddenChange& sc : t.sudden_changes)
    if (sc.measure == TraceMeasure::kFidelity &&
        (std::isnan(best) || std::abs(sc.gamma_t - expected) < std::abs(best - expected)))
      best = sc.gamma_t;
  if (std::isnan(best)) return {false, "no fidelity branch switch recorded"};
  return {std::abs(best - expected) <= 1e-6,
          fmt("f branch switch at %.9f (expected -ln((5-sqrt17)/2)=%.9f)", best, expected)};
}

Outcome unital_monotonicity() {
  const auto t0 = Clock::now();
  const OracleReport r = unital_monotonicity_suite(10000, 42);
  const double s = seconds_since(t0);
  return {r.passed && r.estimate <= 1e-9 && s < 30.0,
          fmt("10000 trials, max increase=%.3g, time=%.2f s; ", r.estimate, s) + r.worst_case};
}

Outcome discord_ordering() {
  std::mt19937_64 rng(2026);
  double worst = INFINITY;
  for (int i = 0; i < 10000; ++i) {
    const TwoQubitState s = random_density(rng);
    worst = std::min(worst, gmqd(s) - rsp_fidelity(s));
  }
  return {worst >= -1e-9, fmt("10000 states, min(d_g - f_rsp)=%.3g", worst)};
}

Outcome closed_form_vs_kraus() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> pd(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const BellDiagonalParams c = testing::random_tetrahedron_point(rng);
    const double p = pd(rng);
    const QubitChannel ad = amplitude_damping(p);
    const TwoQubitState k = apply_local(ad, ad, bell_diagonal(c));
    worst = std::max(worst, max_abs_diff(k.rho(), evolve_closed_form(c, p).rho()));
  }
  return {worst <= 1e-12, fmt("1000 (c,p) pairs, max |rho diff|=%.3g", worst)};
}

Outcome enhancement_witness() {
  const BellDiagonalParams c{-1.0, 0.0, 0.0};
  const double expected_p = (1.0 + std::sqrt(5.0)) / (3.0 + std::sqrt(5.0));
  const double p = p_opt(c);
  const EnhanceReport r = enhance(c);
  const DampingSweep s = sweep_damping(c, 10000);
  const bool ok = std::abs(p - expected_p) <= 1e-12 && std::abs(r.f_after - 0.072949) <= 1e-6 &&
                  std::abs(s.grid_best_p - p) <= 1e-3 && s.grid_best_f <= r.f_after + 1e-15;
  return {ok, fmt("p_opt=%.15g f: %.3g -> %.9f, sweep argmax p=%.6f", p, r.f_before, r.f_after,
                  s.grid_best_p)};
}

Outcome criterion_vs_sweep() {
  std::mt19937_64 rng(13);
  int checked = 0, agree = 0, enhancible = 0;
  std::string first_mismatch;
  while (checked < 1000) {
    const BellDiagonalParams c = testing::random_tetrahedron_point(rng);
    if (std::abs(c.c3) > max_transverse(c)) continue;
    const auto margin = enhancement_margin(c);
    if (!margin || std::abs(*margin) <= 1e-6) continue;
    const DampingSweep s = sweep_damping(c, 10000);
    const bool sweep_says = s.refined_f > f_under_damping(c, 0.0) + 1e-14;
    const bool crit = is_enhancible(c);
    ++checked;
    enhancible += crit;
    if (crit == sweep_says) {
      ++agree;
    } else if (first_mismatch.empty()) {
      first_mismatch = fmt(" first mismatch at (%.6f, %.6f, %.6f)", c.c1, c.c2, c.c3);
    }
  }
  return {agree == checked, fmt("%.0f/%.0f agree (%.0f enhancible)", agree, checked, enhancible) +
                                first_mismatch};
}

Outcome protocol_oracle() {
  const auto t0 = Clock::now();
  const OracleReport r = protocol_suite(50, 42);
  const double s = seconds_since(t0);
  return {r.passed && s < 60.0, fmt("%.0f states, worst |err|=%.3g, time=%.2f s; ", r.trials,
                                    r.abs_err, s) +
                                    r.worst_case};
}

Outcome gmqd_oracle() {
  const OracleReport r = gmqd_suite(20, 42);
  return {r.passed, fmt("%.0f states, worst gap=%.3g; ", r.trials, r.abs_err) + r.worst_case};
}

Outcome discord_raising_demo() {
  const OracleReport r = discord_raising_check();
  return {r.passed, r.worst_case};
}

Outcome local_unitary_invariance() {
  std::mt19937_64 rng(99);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const TwoQubitState s = random_density(rng);
    const TwoQubitState t = local_unitary(s, random_unitary(rng), random_unitary(rng));
    worst = std::max({worst, std::abs(rsp_fidelity(s) - rsp_fidelity(t)),
                      std::abs(gmqd(s) - gmqd(t))});
  }
  return {worst <= 1e-9, fmt("1000 triples, max shift=%.3g", worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"extremal values of singlet and maximally mixed state", extremal_values},
      {"Bell-diagonal (0.5,0,-0.5) initial measures", figure_initial_point},
      {"fidelity vanishes at an instant while discord survives", zero_touch},
      {"fidelity sudden change", sudden_change},
      {"no fidelity increase under local unital channels", unital_monotonicity},
      {"discord bounds fidelity", discord_ordering},
      {"closed-form damping evolution matches Kraus application", closed_form_vs_kraus},
      {"classical state enhanced by optimal damping", enhancement_witness},
      {"enhancibility criterion agrees with brute-force sweep", criterion_vs_sweep},
      {"protocol simulation reproduces the fidelity formula", protocol_oracle},
      {"discord search oracle matches the closed form", gmqd_oracle},
      {"local map raises discord without fidelity", discord_raising_demo},
      {"measures invariant under local unitaries", local_unitary_invariance},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
