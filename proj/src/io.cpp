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

#include "io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "errors.hpp"

namespace orthohot {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

bool is_header(const std::vector<std::string_view>& fields) {
  if (fields.size() != 3 && fields.size() != 4) return false;
  static const char* names[] = {"t", "x", "y", "z"};
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const std::string_view f = trim(fields[i]);
    if (f.size() != 1 || std::tolower(static_cast<unsigned char>(f[0])) != names[i][0])
      return false;
  }
  return true;
}

}  // namespace

ParsedTrajectory parse_trajectory_text(std::string_view text) {
  ParsedTrajectory out;
  out.dim = 0;
  std::size_t lineno = 0;
  bool header_allowed = true;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string_view line =
        nl == std::string_view::npos ? text.substr(start) : text.substr(start, nl - start);
    start = nl == std::string_view::npos ? text.size() : nl + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;

    const auto fields = split(body, ',');
    if (header_allowed && is_header(fields)) {
      out.dim = static_cast<int>(fields.size()) - 1;
      header_allowed = false;
      continue;
    }
    header_allowed = false;
    if (fields.size() != 3 && fields.size() != 4)
      throw ParseError(lineno, "expected t,x,y or t,x,y,z");
    const int dim = static_cast<int>(fields.size()) - 1;
    if (out.dim == 0)
      out.dim = dim;
    else if (dim != out.dim)
      throw ParseError(lineno, "row has " + std::to_string(dim + 1) + " columns, expected " +
                                   std::to_string(out.dim + 1));

    std::array<Rat, 4> vals;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      try {
        vals[i] = rat_from_text(fields[i]);
      } catch (const std::invalid_argument&) {
        throw ParseError(lineno, "bad number '" + std::string(trim(fields[i])) + "'");
      }
    }
    if (out.dim == 2)
      out.v2.push_back({vals[0], {vals[1], vals[2]}});
    else
      out.v3.push_back({vals[0], {vals[1], vals[2], vals[3]}});
    out.source_lines.push_back(lineno);
  }
  if (out.dim == 0) throw ParseError(lineno > 0 ? lineno : 1, "no vertex rows");
  return out;
}

ParsedTrajectory load_trajectory(const std::string& path) {
  return parse_trajectory_text(read_file(path));
}

std::string render_trajectory(const ParsedTrajectory& t) {
  std::ostringstream os;
  if (t.dim == 2) {
    os << "t,x,y\n";
    for (const auto& v : t.v2)
      os << rat_to_round_trip_text(v.t) << ',' << rat_to_round_trip_text(v.p.x) << ','
         << rat_to_round_trip_text(v.p.y) << '\n';
  } else {
    os << "t,x,y,z\n";
    for (const auto& v : t.v3)
      os << rat_to_round_trip_text(v.t) << ',' << rat_to_round_trip_text(v.p.x) << ','
         << rat_to_round_trip_text(v.p.y) << ',' << rat_to_round_trip_text(v.p.z) << '\n';
  }
  return os.str();
}

void save_trajectory(const ParsedTrajectory& t, const std::string& path) {
  write_file(path, render_trajectory(t));
}

std::string render_result(const ResultRecord& r) {
  std::ostringstream os;
  os << "algorithm: " << r.algorithm << '\n';
  os << "dim: " << r.dim << '\n';
  os << "mode: " << r.mode << '\n';
  os << "side: " << r.side << '\n';
  os << "x: " << r.corner[0] << '\n';
  os << "y: " << r.corner[1] << '\n';
  if (r.dim == 3) os << "z: " << r.corner[2] << '\n';
  os << "weight: " << r.weight << '\n';
  os << "x_decimal: " << r.corner_decimal[0] << '\n';
  os << "y_decimal: " << r.corner_decimal[1] << '\n';
  if (r.dim == 3) os << "z_decimal: " << r.corner_decimal[2] << '\n';
  os << "weight_decimal: " << r.weight_decimal << '\n';
  os << "events: " << r.events << '\n';
  os << "winner_changes: " << r.winner_changes << '\n';
  os << "stale_events: " << r.stale_events << '\n';
  os << "runtime_ns: " << r.runtime_ns << '\n';
  return os.str();
}

ResultRecord parse_result_text(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string_view line =
        nl == std::string_view::npos ? text.substr(start) : text.substr(start, nl - start);
    start = nl == std::string_view::npos ? text.size() : nl + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const std::size_t colon = body.find(':');
    if (colon == std::string_view::npos) throw ParseError(lineno, "expected 'key: value'");
    kv.emplace(std::string(trim(body.substr(0, colon))), std::string(trim(body.substr(colon + 1))));
  }
  const auto need = [&](const char* key) -> const std::string& {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ParseError(lineno, std::string("missing field '") + key + "'");
    return it->second;
  };
  const auto get_u64 = [&](const char* key) -> std::uint64_t {
    const auto it = kv.find(key);
    return it == kv.end() ? 0 : std::stoull(it->second);
  };
  ResultRecord r;
  r.algorithm = need("algorithm");
  r.dim = std::stoi(need("dim"));
  if (r.dim != 2 && r.dim != 3) throw ParseError(lineno, "dim must be 2 or 3");
  r.mode = need("mode");
  r.side = need("side");
  r.corner[0] = need("x");
  r.corner[1] = need("y");
  r.corner[2] = r.dim == 3 ? need("z") : "0";
  r.weight = need("weight");
  const auto opt = [&](const char* key, const std::string& fallback) {
    const auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
  };
  r.corner_decimal[0] = opt("x_decimal", r.corner[0]);
  r.corner_decimal[1] = opt("y_decimal", r.corner[1]);
  r.corner_decimal[2] = r.dim == 3 ? opt("z_decimal", r.corner[2]) : "0";
  r.weight_decimal = opt("weight_decimal", r.weight);
  r.events = get_u64("events");
  r.winner_changes = get_u64("winner_changes");
  r.stale_events = get_u64("stale_events");
  r.runtime_ns = get_u64("runtime_ns");
  return r;
}

ResultRecord load_result(const std::string& path) { return parse_result_text(read_file(path)); }

ResultRecord make_record(const std::string& algorithm, const std::string& mode,
                         const Placement<Rat>& p, const RunCounters& c, std::uint64_t runtime_ns) {
  ResultRecord r;
  r.algorithm = algorithm;
  r.dim = p.dim;
  r.mode = mode;
  r.side = rat_to_round_trip_text(p.side);
  r.corner = {rat_to_round_trip_text(p.x), rat_to_round_trip_text(p.y),
              rat_to_round_trip_text(p.z)};
  r.weight = rat_to_round_trip_text(p.weight);
  r.corner_decimal = {rat_to_decimal(p.x), rat_to_decimal(p.y), rat_to_decimal(p.z)};
  r.weight_decimal = rat_to_decimal(p.weight);
  r.events = c.events;
  r.winner_changes = c.winner_changes;
  r.stale_events = c.stale_events;
  r.runtime_ns = runtime_ns;
  return r;
}

ResultRecord make_record(const std::string& algorithm, const std::string& mode,
                         const Placement<double>& p, const RunCounters& c,
                         std::uint64_t runtime_ns) {
  ResultRecord r;
  r.algorithm = algorithm;
  r.dim = p.dim;
  r.mode = mode;
  r.side = Num<double>::to_text(p.side);
  r.corner = {Num<double>::to_text(p.x), Num<double>::to_text(p.y), Num<double>::to_text(p.z)};
  r.weight = Num<double>::to_text(p.weight);
  r.corner_decimal = r.corner;
  r.weight_decimal = r.weight;
  r.events = c.events;
  r.winner_changes = c.winner_changes;
  r.stale_events = c.stale_events;
  r.runtime_ns = runtime_ns;
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace orthohot
