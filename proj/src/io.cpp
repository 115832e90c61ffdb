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

#include "rsplab/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace rsplab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

Json load_json(std::string_view input) {
  const std::string_view t = trim(input);
  if (!t.empty() && t.front() == '{') {
    try {
      return Json::parse(t);
    } catch (const Json::parse_error& e) {
      throw InputError(std::string("invalid JSON: ") + e.what());
    }
  }
  std::ifstream in{std::string(t)};
  if (!in) throw InputError("cannot open file '" + std::string(t) + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("invalid JSON in '" + std::string(t) + "': " + e.what());
  }
}

double json_number(const Json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError(std::string(what) + " must be finite");
  return v;
}

template <std::size_t N>
CMatrix<N> json_matrix(const Json& j, const char* what) {
  if (!j.is_object() || !j.contains("re")) throw InputError(std::string(what) + ": missing \"re\"");
  CMatrix<N> m;
  for (const char* part : {"re", "im"}) {
    if (!j.contains(part)) continue;
    const Json& rows = j.at(part);
    if (!rows.is_array() || rows.size() != N)
      throw InputError(std::string(what) + ": \"" + part + "\" must be " + std::to_string(N) +
                       "x" + std::to_string(N));
    for (std::size_t r = 0; r < N; ++r) {
      if (!rows[r].is_array() || rows[r].size() != N)
        throw InputError(std::string(what) + ": \"" + part + "\" must be " + std::to_string(N) +
                         "x" + std::to_string(N));
      for (std::size_t c = 0; c < N; ++c) {
        const double v = json_number(rows[r][c], what);
        if (part[0] == 'r')
          m(r, c) += v;
        else
          m(r, c) += Complex(0.0, v);
      }
    }
  }
  return m;
}

std::string type_of(const Json& j, const char* what) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
    throw InputError(std::string(what) + " JSON needs a string \"type\"");
  return j.at("type").get<std::string>();
}

template <typename Fn>
auto as_input_error(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

double parse_key(std::string_view field, std::string_view key) {
  if (!starts_with(field, key)) throw InputError("expected '" + std::string(key) + "'");
  return parse_number(field.substr(key.size()));
}

std::vector<std::string_view> csv_row(std::string_view line, std::size_t fields) {
  auto cells = split(line, ',');
  if (cells.size() != fields)
    throw InputError("CSV row has " + std::to_string(cells.size()) + " fields, expected " +
                     std::to_string(fields) + ": '" + std::string(line) + "'");
  return cells;
}

void expect_header(std::istream& is, std::string_view header) {
  std::string line;
  if (!std::getline(is, line) || trim(line) != header)
    throw InputError("expected CSV header '" + std::string(header) + "'");
}

bool parse_bool(std::string_view s) {
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  throw InputError("expected true/false, got '" + std::string(s) + "'");
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

double round12(double v) {
  if (!std::isfinite(v)) return v;
  return parse_number(format_number(v));
}

double parse_number(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(v))
    throw InputError("not a finite number: '" + std::string(text) + "'");
  return v;
}

BellDiagonalParams parse_c(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw InputError("expected c1,c2,c3, got '" + std::string(text) + "'");
  return {parse_number(parts[0]), parse_number(parts[1]), parse_number(parts[2])};
}

TwoQubitState state_from_json(const Json& j) {
  const std::string type = type_of(j, "state");
  return as_input_error([&] {
    if (type == "bell_diagonal") {
      const Json& c = j.contains("c") ? j.at("c") : Json();
      if (!c.is_array() || c.size() != 3) throw InputError("bell_diagonal: \"c\" must have 3 entries");
      return bell_diagonal({json_number(c[0], "c1"), json_number(c[1], "c2"),
                            json_number(c[2], "c3")});
    }
    if (type == "dense") return TwoQubitState::from_density(json_matrix<4>(j, "dense state"));
    throw InputError("unknown state type '" + type + "'");
  });
}

TwoQubitState parse_state(std::string_view input) {
  input = trim(input);
  if (starts_with(input, "bell:")) {
    const BellDiagonalParams c = parse_c(input.substr(5));
    return as_input_error([&] { return bell_diagonal(c); });
  }
  return state_from_json(load_json(input));
}

QubitChannel channel_from_json(const Json& j) {
  const std::string type = type_of(j, "channel");
  return as_input_error([&] {
    if (type == "identity") return identity_channel();
    if (type == "discord_raising") return discord_raising();
    if (type == "kraus") {
      if (!j.contains("ops") || !j.at("ops").is_array() || j.at("ops").empty())
        throw InputError("kraus: \"ops\" must be a non-empty array");
      std::vector<Matrix2c> ops;
      for (const Json& op : j.at("ops")) ops.push_back(json_matrix<2>(op, "kraus operator"));
      return QubitChannel::from_kraus(std::move(ops));
    }
    if (!j.contains("p")) throw InputError(type + ": missing \"p\"");
    const double p = json_number(j.at("p"), "p");
    if (type == "amplitude_damping") return amplitude_damping(p);
    if (type == "depolarizing" || type == "bit_flip" || type == "phase_flip" ||
        type == "bit_phase_flip")
      return unital_builtin(type, p);
    throw InputError("unknown channel type '" + type + "'");
  });
}

QubitChannel parse_channel(std::string_view input) {
  input = trim(input);
  if (input.empty()) throw InputError("empty channel");
  if (input.front() != '{' && input.find('/') == std::string_view::npos &&
      input.find(".json") == std::string_view::npos) {
    Json j;
    const std::size_t colon = input.find(':');
    j["type"] = std::string(input.substr(0, colon));
    if (colon != std::string_view::npos) j["p"] = parse_number(input.substr(colon + 1));
    return channel_from_json(j);
  }
  return channel_from_json(load_json(input));
}

Json to_json(const Matrix4c& m) {
  Json re = Json::array(), im = Json::array();
  for (std::size_t r = 0; r < 4; ++r) {
    Json rr = Json::array(), ri = Json::array();
    for (std::size_t c = 0; c < 4; ++c) {
      rr.push_back(round12(m(r, c).real()));
      ri.push_back(round12(m(r, c).imag()));
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  return {{"re", re}, {"im", im}};
}

Json to_json(const Mat3& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < 3; ++r)
    out.push_back({round12(m(r, 0)), round12(m(r, 1)), round12(m(r, 2))});
  return out;
}

Json to_json(const Vec3& v) { return {round12(v[0]), round12(v[1]), round12(v[2])}; }

Json to_json(const PauliDecomposition& d) {
  return {{"a", to_json(d.a)}, {"b", to_json(d.b)}, {"E", to_json(d.E)}};
}

Json to_json(const MeasureReport& r) {
  return {{"f_rsp", round12(r.f_rsp)},
          {"d_g", round12(r.d_g)},
          {"lambda_max", round12(r.lambda_max)},
          {"e_sq", {round12(r.e_sq[0]), round12(r.e_sq[1]), round12(r.e_sq[2])}}};
}

Json to_json(const EnhanceReport& r) {
  return {{"c", round12(r.c)},           {"enhancible", r.enhancible},
          {"q1", round12(r.q1)},         {"p_opt", round12(r.p_opt)},
          {"f_before", round12(r.f_before)}, {"f_after", round12(r.f_after)}};
}

Json to_json(const DampingSweep& s) {
  return {{"grid_best_p", round12(s.grid_best_p)},
          {"grid_best_f", round12(s.grid_best_f)},
          {"refined_p", round12(s.refined_p)},
          {"refined_f", round12(s.refined_f)}};
}

Json to_json(const ChannelFactorization& f) {
  return {{"R1", to_json(f.R1)},
          {"R2", to_json(f.R2)},
          {"D", {round12(f.D[0]), round12(f.D[1]), round12(f.D[2])}},
          {"sign", f.sign},
          {"d", to_json(f.d)}};
}

Json to_json(const OracleConfig& c) {
  return {{"seed", c.seed},
          {"n_beta", c.n_beta},
          {"n_target", c.n_target},
          {"n_alpha", c.n_alpha},
          {"refine_iters", c.refine_iters}};
}

Json to_json(const OracleReport& r) {
  return {{"name", r.name},
          {"estimate", round12(r.estimate)},
          {"reference", round12(r.reference)},
          {"abs_err", round12(r.abs_err)},
          {"trials", r.trials},
          {"seed", r.seed},
          {"passed", r.passed},
          {"worst_case", r.worst_case},
          {"config", to_json(r.config)}};
}

void write_trace_csv(std::ostream& os, const EvolutionTrace& trace) {
  os << "gamma_t,p,f_rsp,d_g\n";
  for (const TracePoint& pt : trace.points)
    os << format_number(pt.gamma_t) << ',' << format_number(pt.p) << ','
       << format_number(pt.f_rsp) << ',' << format_number(pt.d_g) << '\n';
  for (const SuddenChange& sc : trace.sudden_changes)
    os << "# sudden_change gamma_t=" << format_number(sc.gamma_t)
       << " measure=" << to_string(sc.measure) << '\n';
  for (double z : trace.zero_touches) os << "# zero_touch gamma_t=" << format_number(z) << '\n';
}

EvolutionTrace read_trace_csv(std::istream& is) {
  expect_header(is, "gamma_t,p,f_rsp,d_g");
  EvolutionTrace trace;
  std::string raw;
  while (std::getline(is, raw)) {
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto fields = split(trim(line.substr(1)), ' ');
      if (fields.size() == 3 && fields[0] == "sudden_change") {
        SuddenChange sc;
        sc.gamma_t = parse_key(fields[1], "gamma_t=");
        if (fields[2] == "measure=f")
          sc.measure = TraceMeasure::kFidelity;
        else if (fields[2] == "measure=dg")
          sc.measure = TraceMeasure::kDiscord;
        else
          throw InputError("unknown measure in '" + std::string(line) + "'");
        trace.sudden_changes.push_back(sc);
      } else if (fields.size() == 2 && fields[0] == "zero_touch") {
        trace.zero_touches.push_back(parse_key(fields[1], "gamma_t="));
      } else {
        throw InputError("unknown trace event '" + std::string(line) + "'");
      }
      continue;
    }
    const auto cells = csv_row(line, 4);
    trace.points.push_back({parse_number(cells[0]), parse_number(cells[1]),
                            parse_number(cells[2]), parse_number(cells[3])});
  }
  return trace;
}

void write_scan_csv(std::ostream& os, const TetrahedronScan& scan) {
  os << "c1,c2,c3,enhancible\n";
  for (const ScanPoint& pt : scan.points)
    os << format_number(pt.c.c1) << ',' << format_number(pt.c.c2) << ','
       << format_number(pt.c.c3) << ',' << (pt.enhancible ? "true" : "false") << '\n';
}

std::vector<ScanPoint> read_scan_csv(std::istream& is) {
  expect_header(is, "c1,c2,c3,enhancible");
  std::vector<ScanPoint> out;
  std::string raw;
  while (std::getline(is, raw)) {
    if (trim(raw).empty()) continue;
    const auto cells = csv_row(trim(raw), 4);
    ScanPoint pt;
    pt.c = {parse_number(cells[0]), parse_number(cells[1]), parse_number(cells[2])};
    pt.enhancible = parse_bool(cells[3]);
    out.push_back(pt);
  }
  return out;
}

void write_profile_csv(std::ostream& os, const std::vector<ProfilePoint>& profile) {
  os << "c1,f_before,f_after\n";
  for (const ProfilePoint& pt : profile)
    os << format_number(pt.c1) << ',' << format_number(pt.f_before) << ','
       << format_number(pt.f_after) << '\n';
}

std::vector<ProfilePoint> read_profile_csv(std::istream& is) {
  expect_header(is, "c1,f_before,f_after");
  std::vector<ProfilePoint> out;
  std::string raw;
  while (std::getline(is, raw)) {
    if (trim(raw).empty()) continue;
    const auto cells = csv_row(trim(raw), 3);
    out.push_back({parse_number(cells[0]), parse_number(cells[1]), parse_number(cells[2])});
  }
  return out;
}

}  // namespace rsplab
