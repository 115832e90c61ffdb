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

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "rsplab/enhancement.hpp"
#include "rsplab/measures.hpp"
#include "rsplab/qchannel.hpp"
#include "test_support.hpp"

namespace rsplab {
namespace {

TEST(ClosedForm, MatchesKrausEvolution) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> pd(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const BellDiagonalParams c = testing::random_tetrahedron_point(rng);
    const double p = pd(rng);
    const QubitChannel ad = amplitude_damping(p);
    const TwoQubitState kraus = apply_local(ad, ad, bell_diagonal(c));
    const TwoQubitState closed = evolve_closed_form(c, p);
    EXPECT_LT(max_abs_diff(kraus.rho(), closed.rho()), 1e-12);
    EXPECT_NEAR(f_under_damping(c, p), rsp_fidelity(kraus), 1e-12);
    EXPECT_NEAR(dg_under_damping(c, p), gmqd(kraus), 1e-12);
  }
}

TEST(Q1, SolvesCrossingEquation) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const BellDiagonalParams c = testing::random_tetrahedron_point(rng);
    const double cm = max_transverse(c);
    if (cm == 0.0 || std::abs(c.c3) > cm) continue;
    const double q = q1(cm, c.c3);
    EXPECT_GT(q, 0.0);
    EXPECT_LE(q, 1.0);
    EXPECT_NEAR(q * cm, c.c3 * q * q + (1.0 - q) * (1.0 - q), 1e-13);
  }
  EXPECT_THROW(q1(0.0, 0.0), std::invalid_argument);
  EXPECT_THROW(q1(0.3, 0.5), std::invalid_argument);
}

TEST(Piecewise, AgreesWithClosedForm) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> qd(0.0, 1.0);
  int checked = 0;
  while (checked < 300) {
    const BellDiagonalParams c = testing::random_tetrahedron_point(rng);
    if (std::abs(c.c3) > max_transverse(c)) continue;
    const double q = qd(rng);
    EXPECT_NEAR(f_piecewise(c, q), f_under_damping(c, 1.0 - q), 1e-13);
    ++checked;
  }
  EXPECT_THROW(f_piecewise({0.0, 0.0, 0.5}, 0.5), std::invalid_argument);
}

TEST(Piecewise, DerivativeMatchesFiniteDifference) {
  const BellDiagonalParams c{-0.6, 0.2, 0.1};
  const double lo = q1(max_transverse(c), c.c3);
  for (double q = lo + 0.01; q < 0.99; q += 0.05) {
    const double h = 1e-6;
    const double fd = (f_piecewise(c, q + h) - f_piecewise(c, q - h)) / (2.0 * h);
    EXPECT_NEAR(f_derivative(c, q), fd, 1e-7);
  }
}

TEST(Enhance, ClassicalStateWitness) {
  const BellDiagonalParams c{-1.0, 0.0, 0.0};
  ASSERT_TRUE(is_enhancible(c));
  EXPECT_NEAR(p_opt(c), (1.0 + std::sqrt(5.0)) / (3.0 + std::sqrt(5.0)), 1e-12);
  const EnhanceReport r = enhance(c);
  EXPECT_NEAR(r.f_before, 0.0, 1e-15);
  EXPECT_NEAR(r.f_after, 0.072949, 1e-6);
  const DampingSweep s = sweep_damping(c);
  EXPECT_NEAR(s.grid_best_p, r.p_opt, 1e-3);
  EXPECT_NEAR(s.refined_f, r.f_after, 1e-12);
}

TEST(Enhance, NegativeCases) {
  EXPECT_FALSE(is_enhancible({0.0, 0.0, 0.5}));
  EXPECT_FALSE(is_enhancible({-1.0, -1.0, -1.0}));
  EXPECT_FALSE(is_enhancible({0.0, 0.0, 0.0}));
  EXPECT_FALSE(enhancement_margin({0.0, 0.0, 0.5}).has_value());
  EXPECT_THROW(p_opt({-1.0, -1.0, -1.0}), std::invalid_argument);
  const EnhanceReport r = enhance({-1.0, -1.0, -1.0});
  EXPECT_EQ(r.p_opt, 0.0);
  EXPECT_EQ(r.q1, 1.0);
  EXPECT_NEAR(r.f_after, 1.0, 1e-15);
}

TEST(Enhance, CriterionAgreesWithSweep) {
  std::mt19937_64 rng(44);
  int checked = 0;
  while (checked < 200) {
    const BellDiagonalParams c = testing::random_tetrahedron_point(rng);
    const auto margin = enhancement_margin(c);
    if (!margin || std::abs(*margin) <= 1e-6) continue;
    const DampingSweep s = sweep_damping(c);
    const bool sweep_says = s.refined_f > f_under_damping(c, 0.0) + 1e-14;
    EXPECT_EQ(is_enhancible(c), sweep_says) << c.c1 << ", " << c.c2 << ", " << c.c3;
    if (is_enhancible(c)) {
      EXPECT_NEAR(s.refined_p, p_opt(c), 1e-6);
      EXPECT_NEAR(s.refined_f, enhance(c).f_after, 1e-12);
    }
    ++checked;
  }
}

TEST(Trace, ZeroTouchAndSuddenChange) {
  const BellDiagonalParams c{0.5, 0.0, -0.5};
  const EvolutionTrace t = trace_evolution(c, 3.0, 2001);
  ASSERT_EQ(t.points.size(), 2001u);
  EXPECT_NEAR(t.points.front().f_rsp, 0.125, 1e-12);

  const double touch = -std::log(2.0 - std::sqrt(2.0));
  ASSERT_EQ(t.zero_touches.size(), 1u);
  EXPECT_NEAR(t.zero_touches[0], touch, 1e-9);
  const double q = 2.0 - std::sqrt(2.0);
  EXPECT_NEAR(dg_under_damping(c, 1.0 - q), 0.125 * q * q, 1e-12);
  for (double dt : {-1e-3, 1e-3}) EXPECT_GT(f_under_damping(c, -std::expm1(-(touch + dt))), 0.0);

  const double switch_f = -std::log((5.0 - std::sqrt(17.0)) / 2.0);
  bool found = false;
  for (const SuddenChange& sc : t.sudden_changes)
    if (sc.measure == TraceMeasure::kFidelity && std::abs(sc.gamma_t - switch_f) < 1e-9)
      found = true;
  EXPECT_TRUE(found);
}

TEST(Trace, TrivialAndSinglet) {
  for (const TracePoint& pt : trace_evolution({0.0, 0.0, 0.0}, 2.0, 101).points) {
    EXPECT_EQ(pt.f_rsp, 0.0);
    EXPECT_EQ(pt.d_g, 0.0);
  }
  // Singlet: E = diag(-q, -q, 1 - 2q), so f = (q² + min(q², (1 - 2q)²)) / 2.
  // Not monotone: a dip at q = 0.4 precedes the branch switch at q = 1/3.
  const EvolutionTrace s = trace_evolution({-1.0, -1.0, -1.0}, 3.0, 301);
  EXPECT_NEAR(s.points.front().f_rsp, 1.0, 1e-15);
  for (const TracePoint& pt : s.points) {
    const double q = 1.0 - pt.p;
    const double ref = 0.5 * (q * q + std::min(q * q, (1.0 - 2.0 * q) * (1.0 - 2.0 * q)));
    EXPECT_NEAR(pt.f_rsp, ref, 1e-14);
  }
}

TEST(Trace, RejectsBadArguments) {
  EXPECT_THROW(trace_evolution({0.5, 0.0, -0.5}, 3.0, 1), std::invalid_argument);
  EXPECT_THROW(trace_evolution({0.5, 0.0, -0.5}, 0.0, 10), std::invalid_argument);
  EXPECT_THROW(trace_evolution({1.0, 1.0, 1.0}, 1.0, 10), std::invalid_argument);
}

TEST(Scan, CornersAndWitnessPoint) {
  const TetrahedronScan small = scan_tetrahedron(3);
  for (const ScanPoint& pt : small.points)
    if (std::abs(pt.c.c1 * pt.c.c2 * pt.c.c3) == 1.0) EXPECT_FALSE(pt.enhancible);

  const TetrahedronScan full = scan_tetrahedron(81);
  bool witness = false;
  for (const ScanPoint& pt : full.points)
    if (pt.c.c1 == -1.0 && pt.c.c2 == 0.0 && pt.c.c3 == 0.0) witness = pt.enhancible;
  EXPECT_TRUE(witness);
  for (const SymmetryCheck& s : full.symmetries) {
    const bool expected = s.name == "(-c1,-c2,c3)" || s.name == "(c2,c1,c3)" ||
                          s.name == "(-c2,-c1,c3)";
    EXPECT_EQ(s.holds, expected) << s.name;
  }
}

TEST(Scan, IndependentOfThreadCount) {
  setenv("RSPLAB_THREADS", "1", 1);
  const TetrahedronScan a = scan_tetrahedron(21);
  setenv("RSPLAB_THREADS", "4", 1);
  const TetrahedronScan b = scan_tetrahedron(21);
  unsetenv("RSPLAB_THREADS");
  ASSERT_EQ(a.points.size(), b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i)
    EXPECT_EQ(a.points[i].enhancible, b.points[i].enhancible);
}

TEST(Profile, EndpointsAndGain) {
  const auto prof = profile_line(201);
  ASSERT_EQ(prof.size(), 201u);
  EXPECT_EQ(prof.front().c1, -1.0);
  EXPECT_EQ(prof.back().c1, 1.0);
  EXPECT_NEAR(prof.front().f_before, 1.0, 1e-12);
  EXPECT_NEAR(prof.front().f_after, 1.0, 1e-12);
  EXPECT_NEAR(prof.back().f_before, 1.0, 1e-12);
  for (const ProfilePoint& pt : prof) EXPECT_GE(pt.f_after, pt.f_before - 1e-15);
}

}  // namespace
}  // namespace rsplab
