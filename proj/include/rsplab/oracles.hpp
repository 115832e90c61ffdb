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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rsplab/qstate.hpp"

namespace rsplab {

struct OracleConfig {
  std::uint64_t seed = 42;
  /// Fibonacci-sphere axes tried for Bob's correction axis.
  int n_beta = 1000;
  /// Targets per great circle.
  int n_target = 16;
  /// Fibonacci-sphere grid for Alice's measurement axis.
  int n_alpha = 400;
  /// Local refinement rounds around the best grid direction.
  int refine_iters = 3;

  /// Throws std::invalid_argument if a grid size is below 4 or refine_iters
  /// is negative.
  void validate() const;
};

struct OracleReport {
  std::string name;
  double estimate = 0.0;
  double reference = 0.0;
  double abs_err = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
  bool passed = false;
  std::string worst_case;
  OracleConfig config;
};

/// Unit vectors on a Fibonacci lattice.
std::vector<Vec3> fibonacci_sphere(int n);

/// Per-trial RNG stream derived from (seed, trial); identical in serial and
/// parallel runs.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Direct simulation of the one-cbit protocol: for each correction axis β,
/// targets s on the great circle ⊥ β, Alice's measurement axis α optimized
/// per target, Bob rotating by π about β on the flagged outcome. The payoff
/// is (r·s)² of Bob's final state r (outcome-averaged after correction);
/// the estimate is the minimum over β of the target-averaged optimum.
/// Reference: rsp_fidelity. Passes when abs_err <= 5e-3.
OracleReport protocol_fidelity_oracle(const TwoQubitState& s, const OracleConfig& cfg = {});

/// Upper bound on the normalized discord by direct search over
/// classical-quantum states χ = w |e⟩⟨e|⊗ρ1 + (1-w) |e⊥⟩⟨e⊥|⊗ρ2 minimizing
/// 2‖ρ - χ‖²_HS. Reference: gmqd. Passes when estimate >= reference - 1e-9
/// and estimate - reference <= 1e-3.
OracleReport gmqd_search_oracle(const TwoQubitState& s, const OracleConfig& cfg = {});

/// Random states under random local unital channel pairs; estimate is the
/// largest observed fidelity increase, which must stay <= 1e-9.
OracleReport unital_monotonicity_suite(int n_trials, std::uint64_t seed);

/// AD(p_opt)⊗AD(p_opt) on the classical state (-1, 0, 0): fidelity rises
/// from 0 to q1²/2 and the discord rises too; p_opt ± 0.05 is worse.
OracleReport nonunital_increase_witness();

/// discord_raising ⊗ identity on (|00⟩⟨00| + |11⟩⟨11|)/2: discord 0 -> 1/4,
/// fidelity stays 0.
OracleReport discord_raising_check();

/// protocol_fidelity_oracle over the four named states plus n_random Ginibre
/// states with purity <= 0.99; reports the worst deviation.
OracleReport protocol_suite(int n_random, std::uint64_t seed, const OracleConfig& cfg = {});

/// gmqd_search_oracle over n random Bell-diagonal states.
OracleReport gmqd_suite(int n_states, std::uint64_t seed, const OracleConfig& cfg = {});

}  // namespace rsplab
