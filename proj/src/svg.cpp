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

#include "svg.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace orthohot {

namespace {

struct XY {
  double x, y;
};

}  // namespace

std::string render_svg(const ParsedTrajectory& t, const std::optional<SvgBox>& box) {
  std::vector<XY> pts;
  if (t.dim == 2) {
    for (const auto& v : t.v2) pts.push_back({rat_to_double(v.p.x), rat_to_double(v.p.y)});
  } else {
    for (const auto& v : t.v3) pts.push_back({rat_to_double(v.p.x), rat_to_double(v.p.y)});
  }

  double lox = 0, hix = 1, loy = 0, hiy = 1;
  bool first = true;
  const auto grow = [&](double x, double y) {
    if (first) {
      lox = hix = x;
      loy = hiy = y;
      first = false;
      return;
    }
    lox = std::min(lox, x);
    hix = std::max(hix, x);
    loy = std::min(loy, y);
    hiy = std::max(hiy, y);
  };
  for (const auto& p : pts) grow(p.x, p.y);
  if (box) {
    grow(box->x, box->y);
    grow(box->x + box->side, box->y + box->side);
  }
  const double span = std::max({hix - lox, hiy - loy, 1e-9});
  const double pad = span * 0.05;
  lox -= pad;
  loy -= pad;
  const double scale = 720.0 / (span + 2 * pad);
  const double height = (hiy + pad - loy) * scale;
  const auto sx = [&](double x) { return (x - lox) * scale; };
  const auto sy = [&](double y) { return height - (y - loy) * scale; };

  std::ostringstream os;
  os.precision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"" << height
     << "\" viewBox=\"0 0 720 " << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (pts.size() > 1) {
    os << "<polyline fill=\"none\" stroke=\"#2660a4\" stroke-width=\"1.5\" points=\"";
    for (const auto& p : pts) os << sx(p.x) << ',' << sy(p.y) << ' ';
    os << "\"/>\n";
  }
  // Mark pauses (consecutive identical positions).
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].x == pts[i - 1].x && pts[i].y == pts[i - 1].y)
      os << "<circle cx=\"" << sx(pts[i].x) << "\" cy=\"" << sy(pts[i].y)
         << "\" r=\"3\" fill=\"#2660a4\"/>\n";
  }
  if (pts.size() == 1)
    os << "<circle cx=\"" << sx(pts[0].x) << "\" cy=\"" << sy(pts[0].y)
       << "\" r=\"3\" fill=\"#2660a4\"/>\n";
  if (box) {
    os << "<rect x=\"" << sx(box->x) << "\" y=\"" << sy(box->y + box->side) << "\" width=\""
       << box->side * scale << "\" height=\"" << box->side * scale
       << "\" fill=\"#c1121f\" fill-opacity=\"0.12\" stroke=\"#c1121f\" stroke-width=\"2\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace orthohot
