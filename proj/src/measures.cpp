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

#include "rsplab/measures.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rsplab {

std::array<double, 3> correlation_spectrum(const PauliDecomposition& d) {
  auto values = sym3_eigs(d.E.transpose() * d.E).values;
  for (double& v : values) v = std::max(v, 0.0);
  return values;
}

double rsp_fidelity(const PauliDecomposition& d) {
  const auto e = correlation_spectrum(d);
  return 0.5 * (e[1] + e[2]);
}

namespace {

double lambda_max(const PauliDecomposition& d) {
  return sym3_eigs(Mat3::outer(d.a, d.a) + d.E * d.E.transpose()).values[0];
}

double gmqd_from(const PauliDecomposition& d, double lmax) {
  return std::max(0.0, 0.5 * (dot(d.a, d.a) + d.E.frobenius_sq() - lmax));
}

}  // namespace

double gmqd(const PauliDecomposition& d) { return gmqd_from(d, lambda_max(d)); }

MeasureReport measure_pair(const TwoQubitState& s) {
  const PauliDecomposition& d = s.decomposition();
  MeasureReport r;
  r.e_sq = correlation_spectrum(d);
  r.f_rsp = 0.5 * (r.e_sq[1] + r.e_sq[2]);
  r.lambda_max = lambda_max(d);
  r.d_g = gmqd_from(d, r.lambda_max);
  if (r.d_g < r.f_rsp - 1e-9)
    throw std::logic_error("measure_pair: d_g = " + std::to_string(r.d_g) + " < f_rsp = " +
                           std::to_string(r.f_rsp));
  return r;
}

}  // namespace rsplab
