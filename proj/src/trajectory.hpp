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

#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "geom.hpp"
#include "rational.hpp"

namespace orthohot {

template <class R>
struct TimedVertex2 {
  R t{};
  Pt2<R> p;
};

template <class R>
struct TimedVertex3 {
  R t{};
  Pt3<R> p;
};

/// An axis-parallel (or degenerate) edge weighted by the time the entity
/// spent traversing it. Endpoints are unordered: a is not necessarily the
/// smaller coordinate.
template <class R>
struct Edge2 {
  Pt2<R> a, b;
  R duration{};
  Axis orientation = Axis::point;

  R xmin() const { return a.x < b.x ? a.x : b.x; }
  R xmax() const { return a.x < b.x ? b.x : a.x; }
  R ymin() const { return a.y < b.y ? a.y : b.y; }
  R ymax() const { return a.y < b.y ? b.y : a.y; }
  R length() const {
    switch (orientation) {
      case Axis::x: return R(xmax() - xmin());
      case Axis::y: return R(ymax() - ymin());
      default: return R(0);
    }
  }
  /// Time per unit length; defined only for positive-length edges.
  R rate() const { return R(duration / length()); }
  /// The single y-coordinate of an x-parallel or point edge.
  const R& y() const { return a.y; }

  friend bool operator==(const Edge2&, const Edge2&) = default;
};

template <class R>
struct Edge3 {
  Pt3<R> a, b;
  R duration{};
  Axis orientation = Axis::point;

  R xmin() const { return a.x < b.x ? a.x : b.x; }
  R xmax() const { return a.x < b.x ? b.x : a.x; }
  R ymin() const { return a.y < b.y ? a.y : b.y; }
  R ymax() const { return a.y < b.y ? b.y : a.y; }
  R zmin() const { return a.z < b.z ? a.z : b.z; }
  R zmax() const { return a.z < b.z ? b.z : a.z; }
  R length() const {
    switch (orientation) {
      case Axis::x: return R(xmax() - xmin());
      case Axis::y: return R(ymax() - ymin());
      case Axis::z: return R(zmax() - zmin());
      default: return R(0);
    }
  }
  R rate() const { return R(duration / length()); }

  friend bool operator==(const Edge3&, const Edge3&) = default;
};

/// A trajectory reduced to its unordered set of weighted edges. Immutable
/// by convention after construction; every operation below is a pure
/// function of its inputs.
template <class R>
struct EdgeSet2 {
  std::vector<Edge2<R>> edges;

  bool empty() const { return edges.empty(); }
  std::size_t size() const { return edges.size(); }
  R total_duration() const {
    R sum{};
    for (const auto& e : edges) sum += e.duration;
    return sum;
  }
};

template <class R>
struct EdgeSet3 {
  std::vector<Edge3<R>> edges;

  bool empty() const { return edges.empty(); }
  std::size_t size() const { return edges.size(); }
  R total_duration() const {
    R sum{};
    for (const auto& e : edges) sum += e.duration;
    return sum;
  }
};

/// Builds the edge set of a polyline. Consecutive vertices must differ in at
/// most one coordinate; a stationary pair becomes a point edge carrying the
/// waiting time. Throws NonMonotoneTime / NonOrthogonalStep with the index
/// of the offending vertex.
template <class R>
EdgeSet2<R> build_edge_set(const std::vector<TimedVertex2<R>>& vs) {
  if (vs.empty()) throw EmptyTrajectory{};
  EdgeSet2<R> out;
  out.edges.reserve(vs.size() - 1);
  for (std::size_t i = 1; i < vs.size(); ++i) {
    const auto& u = vs[i - 1];
    const auto& v = vs[i];
    if (!(u.t < v.t)) throw NonMonotoneTime{i};
    const bool dx = u.p.x != v.p.x, dy = u.p.y != v.p.y;
    if (dx && dy) throw NonOrthogonalStep{i};
    Edge2<R> e;
    e.a = u.p;
    e.b = v.p;
    e.duration = v.t - u.t;
    e.orientation = dx ? Axis::x : dy ? Axis::y : Axis::point;
    out.edges.push_back(std::move(e));
  }
  return out;
}

template <class R>
EdgeSet3<R> build_edge_set(const std::vector<TimedVertex3<R>>& vs) {
  if (vs.empty()) throw EmptyTrajectory{};
  EdgeSet3<R> out;
  out.edges.reserve(vs.size() - 1);
  for (std::size_t i = 1; i < vs.size(); ++i) {
    const auto& u = vs[i - 1];
    const auto& v = vs[i];
    if (!(u.t < v.t)) throw NonMonotoneTime{i};
    const bool dx = u.p.x != v.p.x, dy = u.p.y != v.p.y, dz = u.p.z != v.p.z;
    if (static_cast<int>(dx) + static_cast<int>(dy) + static_cast<int>(dz) > 1)
      throw NonOrthogonalStep{i};
    Edge3<R> e;
    e.a = u.p;
    e.b = v.p;
    e.duration = v.t - u.t;
    e.orientation = dx ? Axis::x : dy ? Axis::y : dz ? Axis::z : Axis::point;
    out.edges.push_back(std::move(e));
  }
  return out;
}

/// Splits T into (H, V): H keeps x-parallel and point edges, V the
/// y-parallel ones. H ∪ V = T and the split is weight-preserving for every
/// square, which is what the approximation wrappers rely on.
template <class R>
std::pair<EdgeSet2<R>, EdgeSet2<R>> partition(const EdgeSet2<R>& t) {
  std::pair<EdgeSet2<R>, EdgeSet2<R>> out;
  for (const auto& e : t.edges) {
    if (e.orientation == Axis::y)
      out.second.edges.push_back(e);
    else
      out.first.edges.push_back(e);
  }
  return out;
}

/// One quarter turn: (x, y) -> (y, -x). Applying it four times is the
/// identity.
template <class R>
Pt2<R> rotate_point(Pt2<R> p, int quarter_turns) {
  for (int k = ((quarter_turns % 4) + 4) % 4; k > 0; --k) {
    R nx = p.y;
    R ny = R(-p.x);
    p.x = std::move(nx);
    p.y = std::move(ny);
  }
  return p;
}

template <class R>
EdgeSet2<R> rotate(const EdgeSet2<R>& t, int quarter_turns) {
  const int k = ((quarter_turns % 4) + 4) % 4;
  EdgeSet2<R> out;
  out.edges.reserve(t.edges.size());
  for (const auto& e : t.edges) {
    Edge2<R> r;
    r.a = rotate_point(e.a, k);
    r.b = rotate_point(e.b, k);
    r.duration = e.duration;
    r.orientation = e.orientation;
    if (k % 2 == 1 && e.orientation != Axis::point)
      r.orientation = e.orientation == Axis::x ? Axis::y : Axis::x;
    out.edges.push_back(std::move(r));
  }
  return out;
}

/// Rotates an axis-parallel square by `quarter_turns` and re-anchors it at
/// its new lower-left corner. Weight is carried over unchanged; callers that
/// need it against another edge set re-score explicitly.
template <class R>
Placement<R> rotate_square(const Placement<R>& p, int quarter_turns) {
  Pt2<R> c1 = rotate_point(Pt2<R>{p.x, p.y}, quarter_turns);
  Pt2<R> c2 = rotate_point(Pt2<R>{R(p.x + p.side), R(p.y + p.side)}, quarter_turns);
  Placement<R> out = p;
  out.x = c1.x < c2.x ? c1.x : c2.x;
  out.y = c1.y < c2.y ? c1.y : c2.y;
  return out;
}

/// Total time the entity spends inside the closed square
/// [x, x+s] x [y, y+s]. Point edges and fully contained edges contribute
/// their whole duration; partially overlapping edges contribute
/// proportionally to the clipped length.
template <class R>
R square_weight(const EdgeSet2<R>& t, const R& x, const R& y, const R& s) {
  const R x1 = R(x + s), y1 = R(y + s);
  R total{};
  for (const auto& e : t.edges) {
    switch (e.orientation) {
      case Axis::point:
        if (x <= e.a.x && e.a.x <= x1 && y <= e.a.y && e.a.y <= y1) total += e.duration;
        break;
      case Axis::x: {
        if (e.a.y < y || e.a.y > y1) break;
        const R lo = e.xmin() < x ? x : e.xmin();
        const R hi = e.xmax() < x1 ? e.xmax() : x1;
        if (hi > lo) total += e.duration * (hi - lo) / e.length();
        break;
      }
      case Axis::y: {
        if (e.a.x < x || e.a.x > x1) break;
        const R lo = e.ymin() < y ? y : e.ymin();
        const R hi = e.ymax() < y1 ? e.ymax() : y1;
        if (hi > lo) total += e.duration * (hi - lo) / e.length();
        break;
      }
      case Axis::z: break;  // not a 2D orientation
    }
  }
  return total;
}

/// 3D analogue of square_weight for the closed cube at (x, y, z).
template <class R>
R cube_weight(const EdgeSet3<R>& t, const R& x, const R& y, const R& z, const R& s) {
  const R x1 = R(x + s), y1 = R(y + s), z1 = R(z + s);
  R total{};
  const auto in = [](const R& lo, const R& v, const R& hi) { return lo <= v && v <= hi; };
  for (const auto& e : t.edges) {
    switch (e.orientation) {
      case Axis::point:
        if (in(x, e.a.x, x1) && in(y, e.a.y, y1) && in(z, e.a.z, z1)) total += e.duration;
        break;
      case Axis::x: {
        if (!in(y, e.a.y, y1) || !in(z, e.a.z, z1)) break;
        const R lo = e.xmin() < x ? x : e.xmin();
        const R hi = e.xmax() < x1 ? e.xmax() : x1;
        if (hi > lo) total += e.duration * (hi - lo) / e.length();
        break;
      }
      case Axis::y: {
        if (!in(x, e.a.x, x1) || !in(z, e.a.z, z1)) break;
        const R lo = e.ymin() < y ? y : e.ymin();
        const R hi = e.ymax() < y1 ? e.ymax() : y1;
        if (hi > lo) total += e.duration * (hi - lo) / e.length();
        break;
      }
      case Axis::z: {
        if (!in(x, e.a.x, x1) || !in(y, e.a.y, y1)) break;
        const R lo = e.zmin() < z ? z : e.zmin();
        const R hi = e.zmax() < z1 ? e.zmax() : z1;
        if (hi > lo) total += e.duration * (hi - lo) / e.length();
        break;
      }
    }
  }
  return total;
}

template <class R>
R square_weight(const EdgeSet2<R>& t, const Placement<R>& p) {
  return square_weight(t, p.x, p.y, p.side);
}

template <class R>
R cube_weight(const EdgeSet3<R>& t, const Placement<R>& p) {
  return cube_weight(t, p.x, p.y, p.z, p.side);
}

/// Converts exact edge sets to the double-precision benchmark mode.
inline double scalar_to_double(const double& v) { return v; }

template <class RSrc>
EdgeSet2<double> to_double(const EdgeSet2<RSrc>& t) {
  EdgeSet2<double> out;
  out.edges.reserve(t.edges.size());
  for (const auto& e : t.edges) {
    Edge2<double> d;
    d.a = {Num<RSrc>::to_double(e.a.x), Num<RSrc>::to_double(e.a.y)};
    d.b = {Num<RSrc>::to_double(e.b.x), Num<RSrc>::to_double(e.b.y)};
    d.duration = Num<RSrc>::to_double(e.duration);
    d.orientation = e.orientation;
    out.edges.push_back(d);
  }
  return out;
}

template <class RSrc>
EdgeSet3<double> to_double(const EdgeSet3<RSrc>& t) {
  EdgeSet3<double> out;
  out.edges.reserve(t.edges.size());
  for (const auto& e : t.edges) {
    Edge3<double> d;
    d.a = {Num<RSrc>::to_double(e.a.x), Num<RSrc>::to_double(e.a.y), Num<RSrc>::to_double(e.a.z)};
    d.b = {Num<RSrc>::to_double(e.b.x), Num<RSrc>::to_double(e.b.y), Num<RSrc>::to_double(e.b.z)};
    d.duration = Num<RSrc>::to_double(e.duration);
    d.orientation = e.orientation;
    out.edges.push_back(d);
  }
  return out;
}

}  // namespace orthohot
