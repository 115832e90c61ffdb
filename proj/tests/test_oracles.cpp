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

#include "rsplab/measures.hpp"
#include "rsplab/oracles.hpp"
#include "test_support.hpp"

namespace rsplab {
namespace {

OracleConfig fast_config() {
  OracleConfig cfg;
  cfg.n_beta = 150;
  cfg.n_alpha = 200;
  cfg.n_target = 8;
  return cfg;
}

TEST(FibonacciSphere, UnitAndBalanced) {
  const auto pts = fibonacci_sphere(500);
  ASSERT_EQ(pts.size(), 500u);
  Vec3 mean;
  for (const Vec3& p : pts) {
    EXPECT_NEAR(norm(p), 1.0, 1e-14);
    mean += p;
  }
  EXPECT_LT(norm((1.0 / 500.0) * mean), 1e-2);
  EXPECT_THROW(fibonacci_sphere(0), std::invalid_argument);
}

TEST(TrialRng, DeterministicAndDistinct) {
  auto a = trial_rng(42, 7), b = trial_rng(42, 7), c = trial_rng(42, 8), d = trial_rng(43, 7);
  const auto va = a();
  EXPECT_EQ(va, b());
  EXPECT_NE(va, c());
  EXPECT_NE(va, d());
}

TEST(OracleConfig, RejectsTinyGrids) {
  OracleConfig cfg;
  cfg.n_alpha = 3;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.refine_iters = -1;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  EXPECT_NO_THROW(OracleConfig{}.validate());
}

TEST(ProtocolOracle, NamedStates) {
  const OracleConfig cfg = fast_config();
  for (const TwoQubitState& s :
       {singlet(), maximally_mixed(), bell_diagonal({0.5, 0.0, -0.5}),
        bell_diagonal({-0.3, 0.6, 0.1})}) {
    const OracleReport r = protocol_fidelity_oracle(s, cfg);
    EXPECT_TRUE(r.passed) << r.worst_case;
    EXPECT_NEAR(r.estimate, rsp_fidelity(s), 5e-3);
  }
}

TEST(ProtocolOracle, RandomStates) {
  std::mt19937_64 rng(51);
  const OracleConfig cfg = fast_config();
  for (int i = 0; i < 4; ++i) {
    const TwoQubitState s = random_density(rng);
    const OracleReport r = protocol_fidelity_oracle(s, cfg);
    EXPECT_LE(r.abs_err, 5e-3) << r.worst_case;
  }
}

TEST(GmqdOracle, UpperBoundCloseToClosedForm) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 6; ++i) {
    const TwoQubitState s =
        i % 2 == 0 ? bell_diagonal(testing::random_tetrahedron_point(rng)) : random_density(rng);
    OracleConfig cfg;
    cfg.seed = 100 + static_cast<std::uint64_t>(i);
    const OracleReport r = gmqd_search_oracle(s, cfg);
    EXPECT_GE(r.estimate, gmqd(s) - 1e-9);
    EXPECT_LE(r.estimate - gmqd(s), 1e-3);
    EXPECT_TRUE(r.passed);
  }
}

TEST(MonotonicitySuite, PassesAndIsThreadIndependent) {
  setenv("RSPLAB_THREADS", "1", 1);
  const OracleReport a = unital_monotonicity_suite(400, 9);
  setenv("RSPLAB_THREADS", "3", 1);
  const OracleReport b = unital_monotonicity_suite(400, 9);
  unsetenv("RSPLAB_THREADS");
  EXPECT_TRUE(a.passed);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_EQ(a.worst_case, b.worst_case);
  EXPECT_EQ(a.trials, 400);
  EXPECT_THROW(unital_monotonicity_suite(0, 1), std::invalid_argument);
}

TEST(Witness, NonunitalIncrease) {
  const OracleReport r = nonunital_increase_witness();
  EXPECT_TRUE(r.passed) << r.worst_case;
  EXPECT_NEAR(r.estimate, 0.072949, 1e-6);
}

TEST(DiscordRaising, ZeroToQuarter) {
  const OracleReport r = discord_raising_check();
  EXPECT_TRUE(r.passed) << r.worst_case;
  EXPECT_NEAR(r.estimate, 0.25, 1e-10);
}

TEST(Suites, SmallRuns) {
  const OracleReport p = protocol_suite(2, 5, fast_config());
  EXPECT_TRUE(p.passed) << p.worst_case;
  EXPECT_EQ(p.trials, 6);
  const OracleReport g = gmqd_suite(3, 5);
  EXPECT_TRUE(g.passed) << g.worst_case;
  EXPECT_EQ(g.trials, 3);
}

}  // namespace
}  // namespace rsplab
