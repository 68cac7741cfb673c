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
#include <functional>
#include <optional>
#include <vector>

#include "trajectory.hpp"

namespace orthohot {

/// The z-interval [z0, z0 + s] a cube of side s occupies.
template <class R>
struct Slab {
  R z0, z1;
};

/// Projects the part of a 3D orthogonal trajectory inside the closed slab
/// onto the xy-plane. Horizontal edges (constant z) are kept whole when
/// their z lies in the slab; z-parallel edges collapse to point edges whose
/// duration is the time spent inside the slab; everything else is dropped.
/// For any cube with this slab's z-extent, its weight against the 3D set
/// equals the square weight of its xy-face against the projection.
template <class R>
EdgeSet2<R> project_slab(const EdgeSet3<R>& t, const Slab<R>& slab) {
  EdgeSet2<R> out;
  for (const auto& e : t.edges) {
    switch (e.orientation) {
      case Axis::point:
        if (slab.z0 <= e.a.z && e.a.z <= slab.z1)
          out.edges.push_back({{e.a.x, e.a.y}, {e.a.x, e.a.y}, e.duration, Axis::point});
        break;
      case Axis::x:
      case Axis::y:
        if (slab.z0 <= e.a.z && e.a.z <= slab.z1)
          out.edges.push_back(
              {{e.a.x, e.a.y}, {e.b.x, e.b.y}, e.duration, e.orientation});
        break;
      case Axis::z: {
        const R lo = e.zmin() < slab.z0 ? slab.z0 : e.zmin();
        const R hi = e.zmax() < slab.z1 ? e.zmax() : slab.z1;
        if (hi >= lo)
          out.edges.push_back(
              {{e.a.x, e.a.y}, {e.a.x, e.a.y}, R(e.rate() * (hi - lo)), Axis::point});
        break;
      }
    }
  }
  return out;
}

/// Mirrors the trajectory through the xy-plane (z -> -z).
template <class R>
EdgeSet3<R> reflect_z(const EdgeSet3<R>& t) {
  EdgeSet3<R> out;
  out.edges.reserve(t.edges.size());
  for (const auto& e : t.edges) {
    Edge3<R> r = e;
    r.a.z = R(-e.a.z);
    r.b.z = R(-e.b.z);
    out.edges.push_back(std::move(r));
  }
  return out;
}

/// Lifts a 2D square-hotspot procedure to axis-parallel cube hotspots with
/// the same approximation factor: for every distinct vertex z-coordinate the
/// slab [z, z+s] is projected and solved in 2D, once on the input and once
/// on its z-reflection so that cubes anchored with either xy-face on a
/// vertex are covered. Every candidate cube is scored exactly against the
/// full 3D set.
template <class R>
Placement<R> cube_hotspot(const EdgeSet3<R>& t, const R& s,
                          const std::function<Placement<R>(const EdgeSet2<R>&, const R&)>& algo2d) {
  if (t.empty()) throw EmptyTrajectory{};
  std::optional<Placement<R>> best;
  const auto offer = [&](const R& x, const R& y, const R& z) {
    Placement<R> p{3, x, y, z, s, cube_weight(t, x, y, z, s)};
    if (!best || p.weight > best->weight) best = p;
  };
  const auto pass = [&](const EdgeSet3<R>& t3, bool reflected) {
    std::vector<R> zs;
    zs.reserve(2 * t3.size());
    for (const auto& e : t3.edges) {
      zs.push_back(e.a.z);
      zs.push_back(e.b.z);
    }
    std::sort(zs.begin(), zs.end());
    zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
    for (const R& z0 : zs) {
      const EdgeSet2<R> flat = project_slab(t3, Slab<R>{z0, R(z0 + s)});
      if (flat.empty()) continue;
      const Placement<R> sq = algo2d(flat, s);
      if (reflected)
        offer(sq.x, sq.y, R(-z0 - s));
      else
        offer(sq.x, sq.y, z0);
    }
  };
  pass(t, false);
  pass(reflect_z(t), true);
  return *best;
}

}  // namespace orthohot
