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

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rsplab/enhancement.hpp"
#include "rsplab/measures.hpp"
#include "rsplab/oracles.hpp"
#include "rsplab/qchannel.hpp"
#include "rsplab/qstate.hpp"

namespace rsplab {

using Json = nlohmann::json;

/// Malformed or unphysical user input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// 12 significant digits, locale independent; -0 prints as 0.
std::string format_number(double v);
/// v rounded to 12 significant digits, for JSON output.
double round12(double v);
double parse_number(std::string_view text);

/// "c1,c2,c3". Throws InputError.
BellDiagonalParams parse_c(std::string_view text);

/// {"type":"bell_diagonal","c":[..]} or {"type":"dense","re":[[..]],"im":[[..]]}.
TwoQubitState state_from_json(const Json& j);
/// `bell:c1,c2,c3`, inline JSON, or a path to a JSON file.
TwoQubitState parse_state(std::string_view input);

/// {"type":"amplitude_damping","p":..}, depolarizing / bit_flip / phase_flip /
/// bit_phase_flip with "p", {"type":"discord_raising"}, {"type":"identity"},
/// or {"type":"kraus","ops":[{"re":[[..]],"im":[[..]]},..]}.
QubitChannel channel_from_json(const Json& j);
/// `name` or `name:p` shorthand, inline JSON, or a path to a JSON file.
QubitChannel parse_channel(std::string_view input);

Json to_json(const Matrix4c& m);
Json to_json(const Mat3& m);
Json to_json(const Vec3& v);
Json to_json(const PauliDecomposition& d);
Json to_json(const MeasureReport& r);
Json to_json(const EnhanceReport& r);
Json to_json(const DampingSweep& s);
Json to_json(const ChannelFactorization& f);
Json to_json(const OracleConfig& c);
Json to_json(const OracleReport& r);

void write_trace_csv(std::ostream& os, const EvolutionTrace& trace);
/// Inverse of write_trace_csv. Throws InputError on schema violations.
EvolutionTrace read_trace_csv(std::istream& is);

void write_scan_csv(std::ostream& os, const TetrahedronScan& scan);
std::vector<ScanPoint> read_scan_csv(std::istream& is);

void write_profile_csv(std::ostream& os, const std::vector<ProfilePoint>& profile);
std::vector<ProfilePoint> read_profile_csv(std::istream& is);

}  // namespace rsplab
