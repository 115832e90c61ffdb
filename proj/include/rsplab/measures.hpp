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

#include <array>

#include "rsplab/qstate.hpp"

namespace rsplab {

struct MeasureReport {
  double f_rsp = 0.0;
  double d_g = 0.0;
  /// Largest eigenvalue of a a^T + E E^T.
  double lambda_max = 0.0;
  /// Eigenvalues of E^T E, descending.
  std::array<double, 3> e_sq{};
};

/// Descending eigenvalues of E^T E, clamped at zero.
std::array<double, 3> correlation_spectrum(const PauliDecomposition& d);

/// (E_2² + E_3²) / 2.
double rsp_fidelity(const PauliDecomposition& d);
inline double rsp_fidelity(const TwoQubitState& s) { return rsp_fidelity(s.decomposition()); }

/// Normalized geometric discord: (|a|² + ‖E‖² - λ_max(a a^T + E E^T)) / 2.
double gmqd(const PauliDecomposition& d);
inline double gmqd(const TwoQubitState& s) { return gmqd(s.decomposition()); }

/// Both measures with intermediate spectra. Throws std::logic_error if
/// d_g < f_rsp - 1e-9, which can only be a numerical bug.
MeasureReport measure_pair(const TwoQubitState& s);

}  // namespace rsplab
