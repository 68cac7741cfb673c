// Copyright 2026 The orthohot Authors
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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "geom.hpp"
#include "rational.hpp"
#include "trajectory.hpp"

namespace orthohot {

/// A trajectory as parsed from text: the ordered vertex list plus each
/// vertex's source line for error reporting. The edge-set form is derived
/// via build_edge_set.
struct ParsedTrajectory {
  int dim = 2;
  std::vector<TimedVertex2<Rat>> v2;
  std::vector<TimedVertex3<Rat>> v3;
  std::vector<std::size_t> source_lines;

  std::size_t vertex_count() const { return dim == 2 ? v2.size() : v3.size(); }
};

/// Parses the trajectory table format: one `t,x,y` or `t,x,y,z` row per
/// line, `#` comments and blank lines skipped, optional `t,x,y[,z]` header.
/// Numbers are finite decimals (or `p/q` fractions) read exactly.
/// Throws ParseError with the 1-based line number.
ParsedTrajectory parse_trajectory_text(std::string_view text);

ParsedTrajectory load_trajectory(const std::string& path);  // ParseError / IoError

/// Canonical text form; parsing it back reproduces identical rationals.
std::string render_trajectory(const ParsedTrajectory& t);

void save_trajectory(const ParsedTrajectory& t, const std::string& path);

/// One hotspot run rendered as a structured-text record. Numeric fields are
/// stored as strings: exact rational text in exact mode, shortest-safe
/// decimal in float mode; either way the text round-trips exactly.
struct ResultRecord {
  std::string algorithm;  // exact | quarter | half
  int dim = 2;
  std::string mode;  // exact | float
  std::string side;
  std::array<std::string, 3> corner;
  std::string weight;
  std::array<std::string, 3> corner_decimal;
  std::string weight_decimal;
  std::uint64_t events = 0;
  std::uint64_t winner_changes = 0;
  std::uint64_t stale_events = 0;
  std::uint64_t runtime_ns = 0;
};

std::string render_result(const ResultRecord& r);
ResultRecord parse_result_text(std::string_view text);  // throws ParseError
ResultRecord load_result(const std::string& path);

ResultRecord make_record(const std::string& algorithm, const std::string& mode,
                         const Placement<Rat>& p, const RunCounters& c, std::uint64_t runtime_ns);
ResultRecord make_record(const std::string& algorithm, const std::string& mode,
                         const Placement<double>& p, const RunCounters& c,
                         std::uint64_t runtime_ns);

std::string read_file(const std::string& path);            // IoError
void write_file(const std::string& path, std::string_view content);

}  // namespace orthohot
