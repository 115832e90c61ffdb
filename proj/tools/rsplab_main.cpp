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

// rsplab command-line front end. Exit codes: 0 success, 1 verification
// failure, 2 input error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rsplab/enhancement.hpp"
#include "rsplab/io.hpp"
#include "rsplab/measures.hpp"
#include "rsplab/oracles.hpp"
#include "rsplab/qchannel.hpp"

namespace {

using namespace rsplab;

constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

/// Runs `write` against the file at `path`, or stdout when path is empty.
template <typename Fn>
void emit(const std::string& path, Fn&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  write(out);
  if (!out) throw InputError("write failed for '" + path + "'");
}

Json measure_json(const TwoQubitState& s) { return to_json(measure_pair(s)); }

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 42;
  int trials = -1;
  OracleConfig cfg;
};

int run_verify(const VerifyOptions& opt) {
  const bool all = opt.suite == "all";
  auto trials_or = [&](int fallback) { return opt.trials > 0 ? opt.trials : fallback; };
  OracleConfig cfg = opt.cfg;
  cfg.seed = opt.seed;
  cfg.validate();

  std::vector<OracleReport> reports;
  if (all || opt.suite == "monotonicity")
    reports.push_back(unital_monotonicity_suite(trials_or(10000), opt.seed));
  if (all || opt.suite == "witness") {
    reports.push_back(nonunital_increase_witness());
    reports.push_back(discord_raising_check());
  }
  if (all || opt.suite == "protocol")
    reports.push_back(protocol_suite(trials_or(50), opt.seed, cfg));
  if (all || opt.suite == "gmqd") reports.push_back(gmqd_suite(trials_or(20), opt.seed, cfg));

  Json out = Json::array();
  bool ok = true;
  for (const OracleReport& r : reports) {
    out.push_back(to_json(r));
    if (!r.passed) {
      ok = false;
      std::cerr << "FAILED " << r.name << ": " << r.worst_case << '\n';
    }
  }
  print_json(out);
  return ok ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Remote-state-preparation fidelity and geometric discord toolkit"};
  app.require_subcommand(1);

  std::string state_arg;
  auto* measure = app.add_subcommand("measure", "RSP fidelity and geometric discord of a state");
  measure->add_option("--state", state_arg, "bell:c1,c2,c3, inline JSON, or JSON file")
      ->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Pauli decomposition (a, b, E) of a state");
  decompose_cmd->add_option("--state", state_arg, "bell:c1,c2,c3, inline JSON, or JSON file")
      ->required();

  std::string alice_arg = "identity", bob_arg = "identity";
  auto* apply = app.add_subcommand(
      "apply",
      "Apply local channels A⊗B. Channels: identity, discord_raising, amplitude_damping:p, "
      "depolarizing:p (T = (1-p)I), bit_flip:p, phase_flip:p, bit_phase_flip:p, or JSON");
  apply->add_option("--state", state_arg, "input state")->required();
  apply->add_option("--alice", alice_arg, "channel on the first qubit");
  apply->add_option("--bob", bob_arg, "channel on the second qubit");

  std::string c_text;
  double gamma_t_max = 3.0;
  std::size_t steps = 2001;
  std::string out_path;
  auto* evolve = app.add_subcommand("evolve", "Trace under symmetric amplitude damping (CSV)");
  evolve->add_option("--c", c_text, "c1,c2,c3")->required();
  evolve->add_option("--gamma-t-max", gamma_t_max, "largest scaled time");
  evolve->add_option("--steps", steps, "grid points (>= 2)");
  evolve->add_option("--out", out_path, "CSV path (default stdout)");

  auto* enhance_cmd = app.add_subcommand("enhance", "Enhancibility and optimal damping");
  enhance_cmd->add_option("--c", c_text, "c1,c2,c3")->required();

  std::size_t resolution = 81;
  auto* scan = app.add_subcommand("scan", "Enhancible region on a tetrahedron lattice (CSV)");
  scan->add_option("--resolution", resolution, "lattice points per axis (>= 2)");
  scan->add_option("--out", out_path, "CSV path")->required();

  std::size_t points = 201;
  auto* profile = app.add_subcommand("profile", "Fidelity before/after along (c1, -1, c1) (CSV)");
  profile->add_option("--points", points, "samples of c1 in [-1, 1] (>= 2)");
  profile->add_option("--out", out_path, "CSV path")->required();

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Run oracle suites; exit 1 on failure");
  verify->add_option("--suite", vopt.suite, "protocol|gmqd|monotonicity|witness|all")
      ->check(CLI::IsMember({"protocol", "gmqd", "monotonicity", "witness", "all"}));
  verify->add_option("--seed", vopt.seed, "base seed");
  verify->add_option("--trials", vopt.trials, "trials or states per stochastic suite");
  verify->add_option("--n-beta", vopt.cfg.n_beta, "correction-axis grid");
  verify->add_option("--n-alpha", vopt.cfg.n_alpha, "measurement-axis grid");
  verify->add_option("--n-target", vopt.cfg.n_target, "targets per great circle");
  verify->add_option("--refine-iters", vopt.cfg.refine_iters, "refinement rounds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*measure) {
      print_json(measure_json(parse_state(state_arg)));
    } else if (*decompose_cmd) {
      print_json(to_json(parse_state(state_arg).decomposition()));
    } else if (*apply) {
      const TwoQubitState in = parse_state(state_arg);
      const QubitChannel a = parse_channel(alice_arg);
      const QubitChannel b = parse_channel(bob_arg);
      const TwoQubitState out = apply_local(a, b, in);
      print_json({{"rho", to_json(out.rho())},
                  {"decomposition", to_json(out.decomposition())},
                  {"before", measure_json(in)},
                  {"after", measure_json(out)},
                  {"alice_factorization", to_json(factorize(a))},
                  {"bob_factorization", to_json(factorize(b))}});
    } else if (*evolve) {
      const EvolutionTrace trace = trace_evolution(parse_c(c_text), gamma_t_max, steps);
      emit(out_path, [&](std::ostream& os) { write_trace_csv(os, trace); });
    } else if (*enhance_cmd) {
      const BellDiagonalParams c = parse_c(c_text);
      bell_diagonal(c);
      const EnhanceReport r = enhance(c);
      Json j = to_json(r);
      const auto margin = enhancement_margin(c);
      if (!margin)
        j["criterion_margin"] = nullptr;
      else if (std::isinf(*margin))
        j["criterion_margin"] = "inf";
      else
        j["criterion_margin"] = round12(*margin);
      if (r.enhancible) {
        const DampingSweep sweep = sweep_damping(c);
        j["sweep"] = to_json(sweep);
        j["sweep"]["p_gap"] = round12(std::abs(sweep.refined_p - r.p_opt));
        j["sweep"]["f_gap"] = round12(sweep.refined_f - r.f_after);
      }
      print_json(j);
    } else if (*scan) {
      if (resolution < 2) throw InputError("--resolution must be >= 2");
      const TetrahedronScan s = scan_tetrahedron(resolution);
      emit(out_path, [&](std::ostream& os) { write_scan_csv(os, s); });
      Json sym = Json::array();
      for (const SymmetryCheck& c : s.symmetries)
        sym.push_back({{"map", c.name}, {"holds", c.holds}, {"mismatches", c.mismatches}});
      print_json({{"resolution", s.resolution},
                  {"points", s.points.size()},
                  {"enhancible", s.enhancible_count},
                  {"enhancible_fraction", round12(s.enhancible_fraction)},
                  {"symmetries", sym}});
    } else if (*profile) {
      if (points < 2) throw InputError("--points must be >= 2");
      const auto prof = profile_line(points);
      emit(out_path, [&](std::ostream& os) { write_profile_csv(os, prof); });
    } else if (*verify) {
      return run_verify(vopt);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
