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

#include <algorithm>
#include <optional>
#include <vector>

#include "cube.hpp"
#include "trajectory.hpp"

namespace orthohot {

namespace detail {

// Candidate coordinates per axis: every endpoint coordinate and its shift
// by -s. For orthogonal input the weight function is linear inside each
// grid cell and can only jump up on its boundary, so the maximum over the
// plane is attained at a grid point.
template <class R>
std::vector<R> grid_axis(std::vector<R> vals, const R& s) {
  const std::size_t n = vals.size();
  vals.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) vals.push_back(R(vals[i] - s));
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

}  // namespace detail

/// Exhaustive exact hotspot: evaluates the square weight at every candidate
/// grid point and returns a maximum, ties resolved to the lexicographically
/// smallest (x, y). Cubic in the number of edges; this is the ground truth
/// the sweep algorithms are verified against, and the CLI's exact mode.
template <class R>
Placement<R> exact_hotspot_2d(const EdgeSet2<R>& t, const R& s) {
  if (t.empty()) throw EmptyTrajectory{};
  std::vector<R> xs, ys;
  for (const auto& e : t.edges) {
    xs.push_back(e.a.x);
    xs.push_back(e.b.x);
    ys.push_back(e.a.y);
    ys.push_back(e.b.y);
  }
  xs = detail::grid_axis(std::move(xs), s);
  ys = detail::grid_axis(std::move(ys), s);

  // Per-row prefilter: edges sorted by height for the x-parallel/point
  // part, a linear scan for the y-parallel part whose y-clip is constant
  // along a row.
  struct Flat {  // x-parallel
    R lo, hi, y, rate;
  };
  struct Dot {  // point edge
    R x, y, dur;
  };
  struct Upright {  // y-parallel
    R x, ylo, yhi, rate;
  };
  std::vector<Flat> flats;
  std::vector<Dot> dots;
  std::vector<Upright> uprights;
  for (const auto& e : t.edges) {
    if (e.orientation == Axis::x)
      flats.push_back({e.xmin(), e.xmax(), e.y(), e.rate()});
    else if (e.orientation == Axis::point)
      dots.push_back({e.a.x, e.a.y, e.duration});
    else
      uprights.push_back({e.a.x, e.ymin(), e.ymax(), e.rate()});
  }
  std::sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) { return a.y < b.y; });
  std::sort(dots.begin(), dots.end(), [](const Dot& a, const Dot& b) { return a.y < b.y; });

  std::optional<Placement<R>> best;
  struct Active {
    R x, val;
  };
  std::vector<Active> row_uprights;
  for (const R& y : ys) {
    const R y1 = R(y + s);
    const auto flo = std::lower_bound(flats.begin(), flats.end(), y,
                                      [](const Flat& f, const R& v) { return f.y < v; });
    const auto fhi = std::upper_bound(flats.begin(), flats.end(), y1,
                                      [](const R& v, const Flat& f) { return v < f.y; });
    const auto dlo = std::lower_bound(dots.begin(), dots.end(), y,
                                      [](const Dot& d, const R& v) { return d.y < v; });
    const auto dhi = std::upper_bound(dots.begin(), dots.end(), y1,
                                      [](const R& v, const Dot& d) { return v < d.y; });
    row_uprights.clear();
    for (const auto& u : uprights) {
      const R lo = u.ylo < y ? y : u.ylo;
      const R hi = u.yhi < y1 ? u.yhi : y1;
      if (hi > lo) row_uprights.push_back({u.x, R(u.rate * (hi - lo))});
    }
    for (const R& x : xs) {
      const R x1 = R(x + s);
      R w{};
      for (auto it = flo; it != fhi; ++it) {
        const R lo = it->lo < x ? x : it->lo;
        const R hi = it->hi < x1 ? it->hi : x1;
        if (hi > lo) w += it->rate * (hi - lo);
      }
      for (auto it = dlo; it != dhi; ++it)
        if (x <= it->x && it->x <= x1) w += it->dur;
      for (const auto& u : row_uprights)
        if (x <= u.x && u.x <= x1) w += u.val;
      if (!best || w > best->weight ||
          (w == best->weight && (x < best->x || (x == best->x && y < best->y))))
        best = Placement<R>{2, x, y, R(0), s, w};
    }
  }
  return *best;
}

/// Brute force over squares with a left corner on an edge endpoint of a
/// horizontal trajectory; the verification target for the corner sweep.
template <class R>
Placement<R> corner_anchored_oracle(const EdgeSet2<R>& h, const R& s) {
  if (h.empty()) throw EmptyTrajectory{};
  std::optional<Placement<R>> best;
  const auto offer = [&](const R& x, const R& y) {
    const R w = square_weight(h, x, y, s);
    if (!best || w > best->weight) best = Placement<R>{2, x, y, R(0), s, w};
  };
  for (const auto& e : h.edges) {
    for (const Pt2<R>* p : {&e.a, &e.b}) {
      offer(p->x, p->y);
      offer(p->x, R(p->y - s));
    }
  }
  return *best;
}

/// Exhaustive exact cube hotspot: for every candidate z-plane (vertex
/// z-coordinates and their shifts by -s) the slab is projected and the 2D
/// candidate grid of the projection is scored with the exact cube weight.
template <class R>
Placement<R> exact_hotspot_3d(const EdgeSet3<R>& t, const R& s) {
  if (t.empty()) throw EmptyTrajectory{};
  std::vector<R> zs;
  for (const auto& e : t.edges) {
    zs.push_back(e.a.z);
    zs.push_back(e.b.z);
  }
  zs = detail::grid_axis(std::move(zs), s);

  std::optional<Placement<R>> best;
  for (const R& z : zs) {
    const EdgeSet2<R> flat = project_slab(t, Slab<R>{z, R(z + s)});
    if (flat.empty()) continue;
    std::vector<R> xs, ys;
    for (const auto& e : flat.edges) {
      xs.push_back(e.a.x);
      xs.push_back(e.b.x);
      ys.push_back(e.a.y);
      ys.push_back(e.b.y);
    }
    xs = detail::grid_axis(std::move(xs), s);
    ys = detail::grid_axis(std::move(ys), s);
    for (const R& x : xs) {
      for (const R& y : ys) {
        const R w = cube_weight(t, x, y, z, s);
        if (!best || w > best->weight ||
            (w == best->weight &&
             (x < best->x || (x == best->x && (y < best->y || (y == best->y && z < best->z))))))
          best = Placement<R>{3, x, y, z, s, w};
      }
    }
  }
  return *best;
}

}  // namespace orthohot
